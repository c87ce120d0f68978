#include "equipart/partition.hpp"

#include <algorithm>
#include <string>

#include "equipart/error.hpp"
#include "equipart/structures.hpp"
#include "equipart/verify.hpp"

namespace equipart {

namespace {

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) noexcept { return (a + b - 1) / b; }

/// Sizes of an equitable split of n items into k parts, larger parts first.
std::vector<std::size_t> equitable_sizes(std::size_t n, std::size_t k) {
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

/// Cuts `order` into consecutive runs with equitable sizes.
std::vector<std::vector<Vertex>> split_sequence(const std::vector<Vertex>& order, std::size_t k) {
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(k);
  auto it = order.begin();
  for (std::size_t size : equitable_sizes(order.size(), k)) {
    classes.emplace_back(it, it + static_cast<std::ptrdiff_t>(size));
    it += static_cast<std::ptrdiff_t>(size);
  }
  return classes;
}

std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  return order;
}

void require_k(std::size_t k, const char* who) {
  if (k == 0) throw PreconditionFailed(std::string(who) + ": k must be at least 1");
}

void require_high_degree(const Graph& g, const char* who) {
  if (!is_high_degree(g)) throw PreconditionFailed(std::string(who) + ": requires Delta >= (n-1)/2");
}

}  // namespace

std::string_view to_string(ForestMode mode) noexcept {
  return mode == ForestMode::LinearForest ? "linear-forest" : "forest";
}

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::DiracSplit: return "DiracSplit";
    case CaseTag::Unspecified: break;
  }
  return "Unspecified";
}

std::optional<ForestMode> parse_forest_mode(std::string_view text) noexcept {
  if (text == "linear-forest") return ForestMode::LinearForest;
  if (text == "forest") return ForestMode::Forest;
  return std::nullopt;
}

std::optional<CaseTag> parse_case_tag(std::string_view text) noexcept {
  for (auto tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::DiracSplit}) {
    if (text == to_string(tag)) return tag;
  }
  return std::nullopt;
}

bool is_high_degree(const Graph& g) noexcept {
  return 2 * g.max_degree() + 1 >= g.vertex_count();
}

std::size_t class_bound(const Graph& g) noexcept {
  return std::max(ceil_div(g.max_degree() + 1, 2), ceil_div(g.vertex_count(), 4));
}

Case3Plan plan_case3(std::size_t n, std::size_t k, std::size_t complement_min_degree) {
  const auto sn = static_cast<long>(n);
  const auto sk = static_cast<long>(k);
  const auto delta = static_cast<long>(complement_min_degree);

  Case3Plan plan;
  plan.beta = sn - 3 * sk;
  plan.mu = 4 * sk - sn;
  const long beta_up = (plan.beta + 1) / 2;
  const long beta_down = plan.beta / 2;
  plan.rho = 2 * beta_up - plan.beta;

  plan.v1_count = beta_up;
  plan.u1_first = 2 * beta_up;
  plan.u1_last = 2 * beta_up + (plan.mu + 1) / 2 - plan.rho - 1;
  plan.v2_count = beta_down;
  plan.u2_first = 2 * beta_down;
  plan.u2_last = 2 * beta_down + plan.mu / 2 + plan.rho - 1;

  auto fail = [&](const char* what) {
    throw InternalError(std::string("Case3Plan: ") + what + " (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ", delta=" + std::to_string(delta) + ")");
  };
  if (plan.beta < 1) fail("beta < 1");
  if (plan.mu < 1) fail("mu < 1");
  if (plan.beta + plan.mu != sk) fail("beta + mu != k");
  if (4 * plan.beta + 3 * plan.mu != sn) fail("4 beta + 3 mu != n");
  if (plan.rho < 0 || plan.rho > 1) fail("rho outside {0,1}");
  if (2 * plan.beta + plan.mu > delta) fail("2 beta + mu > delta(G^c)");
  // Highest path index each family touches: x_delta and y_{delta-1} exist.
  if (4 * plan.v1_count - 1 > delta) fail("V1 overruns the first path");
  if (plan.u1_count() > 0 && 2 * plan.u1_last + 1 > delta) fail("U1 overruns the first path");
  if (4 * plan.v2_count - 1 > delta - 1) fail("V2 overruns the second path");
  if (plan.u2_count() > 0 && 2 * plan.u2_last + 1 > delta - 1) fail("U2 overruns the second path");
  if (plan.v1_count + plan.v2_count + plan.u1_count() + plan.u2_count() != sk) fail("class count != k");
  return plan;
}

Partition partition_case1(const Graph& g, std::size_t k) {
  require_k(k, "partition_case1");
  const auto n = g.vertex_count();
  if (k < ceil_div(n, 2)) throw PreconditionFailed("partition_case1: requires k >= ceil(n/2)");
  return {split_sequence(identity_order(n), k), CaseTag::Case1};
}

Partition partition_case2(const Graph& g, std::size_t k) {
  require_k(k, "partition_case2");
  const auto n = g.vertex_count();
  require_high_degree(g, "partition_case2");
  if (k < ceil_div(n, 3) || k >= ceil_div(n, 2)) {
    throw PreconditionFailed("partition_case2: requires ceil(n/3) <= k < ceil(n/2)");
  }
  if (k < ceil_div(g.max_degree() + 1, 2)) {
    throw PreconditionFailed("partition_case2: requires k >= ceil((Delta+1)/2)");
  }

  const ComplementView complement(g);
  const auto delta = complement.min_degree();
  if (is_connected(complement) && n <= 2 * delta) {
    throw InternalError("partition_case2: connected complement with n <= 2*delta(G^c)");
  }
  const Matching matching = find_matching_size_delta(complement);
  const std::size_t triples = n - 2 * k;
  if (matching.size() < triples) throw InternalError("partition_case2: complement matching too small");

  VertexSet used(n);
  for (std::size_t i = 0; i < triples; ++i) {
    used.insert(matching.edges[i].first);
    used.insert(matching.edges[i].second);
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!used.contains(v)) rest.push_back(v);
  }
  // z_1..z_t are the smallest unused ids; what follows pairs up.
  if (rest.size() != n - 2 * triples || rest.size() - triples != 2 * (3 * k - n)) {
    throw InternalError("partition_case2: leftover count != 2(3k - n)");
  }

  Partition p{{}, CaseTag::Case2};
  p.classes.reserve(k);
  for (std::size_t i = 0; i < triples; ++i) {
    p.classes.push_back({matching.edges[i].first, matching.edges[i].second, rest[i]});
  }
  for (std::size_t i = triples; i < rest.size(); i += 2) p.classes.push_back({rest[i], rest[i + 1]});
  return p;
}

Partition partition_case3(const Graph& g, std::size_t k) {
  require_k(k, "partition_case3");
  const auto n = g.vertex_count();
  require_high_degree(g, "partition_case3");
  if (k < ceil_div(g.max_degree() + 1, 2) || k >= ceil_div(n, 3)) {
    throw PreconditionFailed("partition_case3: requires ceil((Delta+1)/2) <= k < ceil(n/3)");
  }

  const ComplementView complement(g);
  const Case3Plan plan = plan_case3(n, k, complement.min_degree());
  const DisjointPathPair paths = find_two_disjoint_paths(complement);
  const auto& x = paths.p1.vertices;
  const auto& y = paths.p2.vertices;

  Partition p{{}, CaseTag::Case3};
  p.classes.reserve(k);
  VertexSet used(n);
  auto take = [&](std::vector<Vertex> cls) {
    for (Vertex v : cls) used.insert(v);
    p.classes.push_back(std::move(cls));
  };
  auto four = [](const std::vector<Vertex>& path, long i) {
    const auto b = static_cast<std::size_t>(4 * i - 4);
    return std::vector<Vertex>{path[b], path[b + 1], path[b + 2], path[b + 3]};
  };
  auto two = [](const std::vector<Vertex>& path, long i) {
    const auto b = static_cast<std::size_t>(2 * i);
    return std::vector<Vertex>{path[b], path[b + 1]};
  };

  for (long i = 1; i <= plan.v1_count; ++i) take(four(x, i));
  for (long i = 1; i <= plan.v2_count; ++i) take(four(y, i));
  const std::size_t first_pair = p.classes.size();
  for (long i = plan.u1_first; i <= plan.u1_last; ++i) take(two(x, i));
  for (long i = plan.u2_first; i <= plan.u2_last; ++i) take(two(y, i));

  std::vector<Vertex> leftover;
  for (Vertex v = 0; v < n; ++v) {
    if (!used.contains(v)) leftover.push_back(v);
  }
  const std::size_t pairs = p.classes.size() - first_pair;
  if (static_cast<long>(leftover.size()) != plan.mu || leftover.size() != pairs) {
    throw InternalError("partition_case3: |S| != mu");
  }
  for (std::size_t i = 0; i < pairs; ++i) p.classes[first_pair + i].push_back(leftover[i]);
  if (p.classes.size() != k) throw InternalError("partition_case3: class count != k");
  return p;
}

Partition partition_dirac_split(const Graph& g, std::size_t k) {
  require_k(k, "partition_dirac_split");
  const auto n = g.vertex_count();
  if (is_high_degree(g)) throw PreconditionFailed("partition_dirac_split: requires Delta < (n-1)/2");
  if (k < ceil_div(n, 4)) throw PreconditionFailed("partition_dirac_split: requires k >= ceil(n/4)");

  // Only n = 2 with no edge reaches here below three vertices; its
  // complement is a single edge and the identity order is already a path.
  std::vector<Vertex> order =
      n < 3 ? identity_order(n) : find_hamiltonian_cycle(ComplementView(g)).vertices;
  return {split_sequence(order, k), CaseTag::DiracSplit};
}

Partition partition_equitable(const Graph& g, std::size_t k) {
  const auto n = g.vertex_count();
  const auto bound = class_bound(g);
  if (k < bound) throw InsufficientClasses(k, bound);

  Partition p;
  if (is_high_degree(g)) {
    if (k >= ceil_div(n, 2)) {
      p = partition_case1(g, k);
    } else if (k >= ceil_div(n, 3)) {
      p = partition_case2(g, k);
    } else {
      p = partition_case3(g, k);
    }
  } else {
    p = partition_dirac_split(g, k);
  }

  const auto report = verify_partition(g, p, ForestMode::LinearForest);
  if (!report.valid) {
    throw InternalError("partition_equitable: " + std::string(to_string(p.case_tag)) +
                        " output failed verification");
  }
  return p;
}

}  // namespace equipart
