#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "equipart/graph.hpp"
#include "equipart/partition.hpp"

namespace equipart {

/// Exhaustive search works on graphs of at most this many vertices.
inline constexpr std::size_t kOracleMaxVertices = 64;

struct OracleOptions {
  /// Per-search cap on assignment attempts; exceeding it throws BudgetExceeded.
  std::uint64_t node_budget = 1'000'000'000;
  /// Called every `progress_interval` nodes with the running node count.
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 24;
};

struct OracleResult {
  std::size_t k = 0;
  bool found = false;
  std::optional<Partition> witness;
  std::uint64_t nodes_explored = 0;
  ForestMode mode = ForestMode::LinearForest;
};

/// Complete backtracking search for an equitable k-coloring whose classes
/// induce the given kind of forest. found == false is a nonexistence proof.
OracleResult search_equitable_coloring(const Graph& g, std::size_t k, ForestMode mode,
                                       const OracleOptions& options = {});

struct MinKResult {
  std::size_t k = 0;
  std::uint64_t nodes_explored = 0;
};

/// Smallest k admitting a coloring (lva= or va=), scanning k upward.
MinKResult compute_min_k(const Graph& g, ForestMode mode, const OracleOptions& options = {});

struct ThresholdResult {
  /// Smallest k with a coloring for every k' in [k, horizon].
  std::size_t threshold = 0;
  /// class_bound(g). Beyond it success comes from the constructor, which
  /// is run and verified for every k' in (horizon, n].
  std::size_t horizon = 0;
  std::uint64_t nodes_explored = 0;
};

/// lva-threshold or va-threshold.
ThresholdResult compute_threshold_k(const Graph& g, ForestMode mode, const OracleOptions& options = {});

}  // namespace equipart
