#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/partition.hpp"

namespace equipart {

enum class ViolationKind { Size, Cycle, Degree, Coverage, Overlap };

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  /// Offending class, or empty for a vertex that no class covers.
  std::optional<std::size_t> class_index;
  ViolationKind kind;
  std::string detail;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<std::size_t> class_sizes;
  /// Echoed from the partition; never consulted by the checks.
  CaseTag case_tag = CaseTag::Unspecified;
};

/// Every vertex has degree <= 2 and the graph is acyclic.
bool is_linear_forest(const Graph& h);
bool is_forest(const Graph& h);

/// Checks coverage and disjointness, equitable sizes, and that every class
/// induces a (linear) forest. Lists every violation found.
VerificationReport verify_partition(const Graph& g, const Partition& p, ForestMode mode);

}  // namespace equipart
