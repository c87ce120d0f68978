#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "equipart/graph.hpp"

namespace equipart {

enum class GraphModel { Gnp, Complete, CompleteBipartite, Cycle, BoundedDegree };

std::string_view to_string(GraphModel model) noexcept;
std::optional<GraphModel> parse_graph_model(std::string_view text) noexcept;

struct GeneratorParams {
  std::size_t n = 0;           // vertices; first side for complete-bipartite
  std::size_t m = 0;           // second side for complete-bipartite
  double p = 0.0;              // edge probability for gnp and bounded-degree
  std::size_t max_degree = 0;  // exact maximum degree for bounded-degree
};

/// Deterministic for a fixed seed.
///   gnp               each pair independently with probability p
///   complete          K_n
///   complete-bipartite K_{n,m}, sides 0..n-1 and n..n+m-1
///   cycle             C_n, n >= 3
///   bounded-degree    vertex 0 joined to 1..max_degree, then each remaining
///                     pair with probability p while both ends stay below
///                     max_degree; Delta equals max_degree exactly
/// Throws InvalidInput on out-of-range parameters.
Graph generate(GraphModel model, const GeneratorParams& params, std::uint64_t seed);

}  // namespace equipart
