#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart {

/// What each class must induce.
enum class ForestMode { LinearForest, Forest };

/// Which construction produced a partition.
enum class CaseTag { Case1, Case2, Case3, DiracSplit, Unspecified };

std::string_view to_string(ForestMode mode) noexcept;
std::string_view to_string(CaseTag tag) noexcept;
std::optional<ForestMode> parse_forest_mode(std::string_view text) noexcept;
std::optional<CaseTag> parse_case_tag(std::string_view text) noexcept;

/// Assignment of vertices to k classes. Empty classes are allowed (k > n).
struct Partition {
  std::vector<std::vector<Vertex>> classes;
  CaseTag case_tag = CaseTag::Unspecified;

  std::size_t k() const noexcept { return classes.size(); }
};

/// Index bookkeeping for the three-or-four construction. Ranges are
/// inclusive and empty when `last < first`.
struct Case3Plan {
  long beta = 0;  // n - 3k: number of four-vertex classes
  long mu = 0;    // 4k - n: number of three-vertex classes
  long rho = 0;   // 2*ceil(beta/2) - beta

  long v1_count = 0;  // four-sets taken from the first path
  long u1_first = 0;
  long u1_last = -1;
  long v2_count = 0;  // four-sets taken from the second path
  long u2_first = 0;
  long u2_last = -1;

  long u1_count() const noexcept { return u1_last >= u1_first ? u1_last - u1_first + 1 : 0; }
  long u2_count() const noexcept { return u2_last >= u2_first ? u2_last - u2_first + 1 : 0; }
};

/// Builds the plan and asserts its identities (beta, mu >= 1,
/// beta + mu = k, 4 beta + 3 mu = n, rho in {0,1}, 2 beta + mu <= delta).
/// Throws InternalError when any of them fails.
Case3Plan plan_case3(std::size_t n, std::size_t k, std::size_t complement_min_degree);

/// max{ceil((Delta+1)/2), ceil(n/4)}: every k at or above this works.
std::size_t class_bound(const Graph& g) noexcept;

/// True when Delta(g) >= (n-1)/2, the regime handled by Cases 1-3.
bool is_high_degree(const Graph& g) noexcept;

/// Equitable partition into k classes, each inducing a linear forest.
/// Throws InsufficientClasses below class_bound(g).
Partition partition_equitable(const Graph& g, std::size_t k);

/// Classes of size one or two, in vertex-id order. Requires k >= ceil(n/2).
Partition partition_case1(const Graph& g, std::size_t k);

/// Triples around complement-matching edges plus pairs.
/// Requires ceil(n/3) <= k < ceil(n/2), Delta >= (n-1)/2, k >= ceil((Delta+1)/2).
Partition partition_case2(const Graph& g, std::size_t k);

/// Classes of three or four vertices cut from two disjoint complement paths.
/// Requires ceil((Delta+1)/2) <= k < ceil(n/3), Delta >= (n-1)/2.
Partition partition_case3(const Graph& g, std::size_t k);

/// Consecutive arcs of a Hamiltonian cycle of the complement.
/// Requires Delta < (n-1)/2, k >= ceil(n/4).
Partition partition_dirac_split(const Graph& g, std::size_t k);

}  // namespace equipart
