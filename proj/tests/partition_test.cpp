#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "equipart/error.hpp"
#include "equipart/generate.hpp"
#include "equipart/oracle.hpp"
#include "equipart/partition.hpp"
#include "equipart/verify.hpp"
#include "support/test_graphs.hpp"

namespace equipart {
namespace {

using testing::complete;
using testing::cycle;

std::vector<std::size_t> sorted_sizes(const Partition& p) {
  std::vector<std::size_t> s;
  for (const auto& c : p.classes) s.push_back(c.size());
  std::sort(s.rbegin(), s.rend());
  return s;
}

void expect_valid(const Graph& g, const Partition& p) {
  const auto report = verify_partition(g, p, ForestMode::LinearForest);
  EXPECT_TRUE(report.valid);
  for (const auto& v : report.violations) ADD_FAILURE() << v.detail;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Graph seven_cycle_with_chord() {
  auto e = cycle(7).edges();
  e.emplace_back(0, 3);
  return build_graph(7, e);
}

TEST(ClassBound, NamedGraphs) {
  EXPECT_EQ(class_bound(complete(4)), 2u);
  EXPECT_EQ(class_bound(testing::complete_bipartite(9, 9)), 5u);
  EXPECT_EQ(class_bound(testing::petersen()), 3u);
  EXPECT_EQ(class_bound(testing::edgeless(8)), 2u);
  EXPECT_TRUE(is_high_degree(cycle(5)));   // 2 >= 2
  EXPECT_FALSE(is_high_degree(cycle(6)));  // 2 < 2.5
}

TEST(PartitionEquitable, K6WithThreeClassesIsCase1) {
  const Graph g = complete(6);
  const Partition p = partition_equitable(g, 3);
  EXPECT_EQ(p.case_tag, CaseTag::Case1);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{2, 2, 2}));
  expect_valid(g, p);
}

TEST(PartitionEquitable, K99WithNineClassesIsCase1) {
  const Graph g = testing::complete_bipartite(9, 9);
  const Partition p = partition_equitable(g, 9);
  EXPECT_EQ(p.case_tag, CaseTag::Case1);
  EXPECT_EQ(sorted_sizes(p), std::vector<std::size_t>(9, 2));
  expect_valid(g, p);
}

TEST(PartitionEquitable, SevenCycleWithChordIsCase3) {
  const Graph g = seven_cycle_with_chord();
  const Partition p = partition_equitable(g, 2);
  EXPECT_EQ(p.case_tag, CaseTag::Case3);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{4, 3}));
  expect_valid(g, p);
  EXPECT_TRUE(search_equitable_coloring(g, 2, ForestMode::LinearForest).found);
}

TEST(PartitionEquitable, BelowTheBoundReportsIt) {
  try {
    partition_equitable(complete(4), 1);
    FAIL() << "expected InsufficientClasses";
  } catch (const InsufficientClasses& e) {
    EXPECT_EQ(e.k(), 1u);
    EXPECT_EQ(e.bound(), 2u);
  }
  EXPECT_THROW(partition_equitable(testing::petersen(), 2), InsufficientClasses);
  EXPECT_THROW(partition_equitable(complete(3), 0), Error);
}

TEST(PartitionEquitable, TinyGraphs) {
  EXPECT_EQ(partition_equitable(testing::edgeless(0), 1).classes.size(), 1u);
  const Partition one = partition_equitable(testing::edgeless(1), 1);
  EXPECT_EQ(one.classes, (std::vector<std::vector<Vertex>>{{0}}));
  const Partition two = partition_equitable(testing::edgeless(2), 1);
  EXPECT_EQ(two.case_tag, CaseTag::DiracSplit);
  EXPECT_EQ(sorted_sizes(two), (std::vector<std::size_t>{2}));
}

TEST(Case1, K4InTwoClasses) {
  const Partition p = partition_case1(complete(4), 2);
  EXPECT_EQ(p.classes, (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(p.case_tag, CaseTag::Case1);
}

TEST(Case1, MoreClassesThanVertices) {
  const Partition p = partition_case1(complete(3), 5);
  EXPECT_EQ(p.classes, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {}, {}}));
  expect_valid(complete(3), p);
}

TEST(Case1, FiveVerticesThreeClasses) {
  const Partition p = partition_case1(cycle(5), 3);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{2, 2, 1}));
}

TEST(Case1, RejectsTooFewClasses) { EXPECT_THROW(partition_case1(complete(5), 2), PreconditionFailed); }

TEST(Case2, FiveCycle) {
  const Graph g = cycle(5);
  const Partition p = partition_case2(g, 2);
  EXPECT_EQ(p.case_tag, CaseTag::Case2);
  EXPECT_EQ(p.classes, (std::vector<std::vector<Vertex>>{{0, 2, 1}, {3, 4}}));
  expect_valid(g, p);
  // The triple is built around a complement edge.
  EXPECT_FALSE(g.adjacent(p.classes[0][0], p.classes[0][1]));
}

TEST(Case2, K5MinusEdgeIsBelowTheDegreeBound) {
  // Delta = 4, so ceil((Delta+1)/2) = 3 > 2.
  auto e = complete(5).edges();
  e.erase(std::find(e.begin(), e.end(), Edge{0, 1}));
  const Graph g = build_graph(5, e);
  EXPECT_EQ(g.max_degree(), 4u);
  EXPECT_THROW(partition_case2(g, 2), PreconditionFailed);
  EXPECT_THROW(partition_equitable(g, 2), InsufficientClasses);
  const Partition p = partition_equitable(g, 3);
  EXPECT_EQ(p.case_tag, CaseTag::Case1);
  expect_valid(g, p);
}

TEST(Case2, RejectsCase1Territory) {
  EXPECT_THROW(partition_case2(cycle(5), 3), PreconditionFailed);
  EXPECT_THROW(partition_case2(complete(6), 3), PreconditionFailed);
}

TEST(Case3, PlanForSevenCycleWithChord) {
  const Case3Plan plan = plan_case3(7, 2, 3);
  EXPECT_EQ(plan.beta, 1);
  EXPECT_EQ(plan.mu, 1);
  EXPECT_EQ(plan.rho, 1);
  EXPECT_EQ(plan.v1_count, 1);
  EXPECT_EQ(plan.u1_first, 2);
  EXPECT_EQ(plan.u1_last, 1);
  EXPECT_EQ(plan.u1_count(), 0);
  EXPECT_EQ(plan.v2_count, 0);
  EXPECT_EQ(plan.u2_first, 0);
  EXPECT_EQ(plan.u2_last, 0);
  EXPECT_EQ(plan.u2_count(), 1);
}

TEST(Case3, PlanWithTwoOfEach) {
  const Case3Plan plan = plan_case3(14, 4, 6);
  EXPECT_EQ(plan.beta, 2);
  EXPECT_EQ(plan.mu, 2);
  EXPECT_EQ(plan.rho, 0);
  EXPECT_EQ(plan.v1_count, 1);
  EXPECT_EQ(plan.v2_count, 1);
  EXPECT_EQ(plan.u1_count(), 1);
  EXPECT_EQ(plan.u2_count(), 1);
}

TEST(Case3, PlanRejectsBrokenAccounting) {
  EXPECT_THROW(plan_case3(14, 4, 5), InternalError);  // 2 beta + mu = 6 > 5
  EXPECT_THROW(plan_case3(12, 4, 9), InternalError);  // beta = 0
  EXPECT_THROW(plan_case3(16, 4, 9), InternalError);  // mu = 0
}

TEST(Case3, PlanIdentitiesOverARange) {
  for (std::size_t k = 2; k < 40; ++k) {
    for (std::size_t n = 3 * k + 1; n < 4 * k; ++n) {
      const Case3Plan plan = plan_case3(n, k, 2 * (n - 3 * k) + (4 * k - n));
      EXPECT_EQ(plan.beta + plan.mu, static_cast<long>(k));
      EXPECT_EQ(4 * plan.beta + 3 * plan.mu, static_cast<long>(n));
      EXPECT_EQ(plan.v1_count + plan.v2_count, plan.beta);
      EXPECT_EQ(plan.u1_count() + plan.u2_count(), plan.mu);
    }
  }
}

void check_two_of_each(const Graph& g) {
  ASSERT_EQ(g.max_degree(), 7u);
  const Partition p = partition_equitable(g, 4);
  EXPECT_EQ(p.case_tag, CaseTag::Case3);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{4, 4, 3, 3}));
  expect_valid(g, p);
}

TEST(Case3, K77) { check_two_of_each(testing::complete_bipartite(7, 7)); }

TEST(Case3, ConnectedComplementOnFourteenVertices) {
  const Graph g = testing::circulant(14, {1, 2, 3, 7});
  ASSERT_EQ(ComplementView(g).min_degree(), 6u);
  ASSERT_TRUE(is_connected(ComplementView(g)));
  check_two_of_each(g);
}

TEST(Case3, RejectsOutOfRangeK) {
  EXPECT_THROW(partition_case3(seven_cycle_with_chord(), 3), PreconditionFailed);
  EXPECT_THROW(partition_case3(testing::petersen(), 3), PreconditionFailed);  // low degree
}

TEST(DiracSplit, Petersen) {
  const Graph g = testing::petersen();
  const Partition p = partition_equitable(g, 3);
  EXPECT_EQ(p.case_tag, CaseTag::DiracSplit);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{4, 3, 3}));
  expect_valid(g, p);
}

TEST(DiracSplit, EdgelessOnEight) {
  const Graph g = testing::edgeless(8);
  const Partition p = partition_dirac_split(g, 2);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{4, 4}));
  expect_valid(g, p);
}

TEST(DiracSplit, SixCycle) {
  const Graph g = cycle(6);
  const Partition p = partition_dirac_split(g, 2);
  EXPECT_EQ(sorted_sizes(p), (std::vector<std::size_t>{3, 3}));
  expect_valid(g, p);
}

TEST(DiracSplit, RejectsHighDegreeAndFewClasses) {
  EXPECT_THROW(partition_dirac_split(cycle(5), 2), PreconditionFailed);
  EXPECT_THROW(partition_dirac_split(testing::edgeless(9), 2), PreconditionFailed);
}

CaseTag expected_case(const Graph& g, std::size_t k) {
  const auto n = g.vertex_count();
  if (!is_high_degree(g)) return CaseTag::DiracSplit;
  if (k >= ceil_div(n, 2)) return CaseTag::Case1;
  if (k >= ceil_div(n, 3)) return CaseTag::Case2;
  return CaseTag::Case3;
}

TEST(PartitionProperties, DispatchIsExactAndEveryClassIsEquitable) {
  std::mt19937_64 rng(17);
  std::map<CaseTag, int> hits;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const double p = std::array{0.05, 0.2, 0.5, 0.8, 0.95}[rng() % 5];
    const Graph g = generate(GraphModel::Gnp, {.n = n, .p = p}, rng());
    const auto bound = class_bound(g);
    EXPECT_EQ(bound, std::max(ceil_div(g.max_degree() + 1, 2), ceil_div(n, 4)));
    for (std::size_t k = std::max<std::size_t>(bound, 1); k <= n + 2; ++k) {
      const Partition part = partition_equitable(g, k);
      EXPECT_EQ(part.case_tag, expected_case(g, k)) << "n=" << n << " k=" << k;
      ASSERT_EQ(part.k(), k);
      for (const auto& c : part.classes) {
        EXPECT_GE(c.size(), n / k);
        EXPECT_LE(c.size(), ceil_div(n, k));
      }
      expect_valid(g, part);
      ++hits[part.case_tag];
    }
    if (bound > 1) EXPECT_THROW(partition_equitable(g, bound - 1), InsufficientClasses);
  }
  for (auto tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::DiracSplit}) {
    EXPECT_GT(hits[tag], 0) << to_string(tag);
  }
}

TEST(PartitionProperties, DeterministicForEqualInput) {
  const Graph g = generate(GraphModel::Gnp, {.n = 80, .p = 0.6}, 4);
  for (std::size_t k = class_bound(g); k <= 80; k += 7) {
    EXPECT_EQ(partition_equitable(g, k).classes, partition_equitable(g, k).classes);
  }
}

TEST(CaseTags, RoundTripThroughStrings) {
  for (auto tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::DiracSplit}) {
    EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
  }
  EXPECT_EQ(parse_forest_mode("forest"), ForestMode::Forest);
  EXPECT_EQ(parse_forest_mode("linear-forest"), ForestMode::LinearForest);
  EXPECT_FALSE(parse_forest_mode("tree").has_value());
}

}  // namespace
}  // namespace equipart
