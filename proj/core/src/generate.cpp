#include "equipart/generate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "equipart/error.hpp"

namespace equipart {

namespace {

/// Bernoulli(p) from one 64-bit draw, identical on every platform.
class Coin {
 public:
  Coin(double p, std::uint64_t seed) : rng_(seed), always_(p >= 1.0) {
    threshold_ = p <= 0.0 || always_ ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64));
  }
  bool flip() { return always_ || rng_() < threshold_; }

 private:
  std::mt19937_64 rng_;
  bool always_;
  std::uint64_t threshold_;
};

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(GraphModel model) noexcept {
  switch (model) {
    case GraphModel::Gnp: return "gnp";
    case GraphModel::Complete: return "complete";
    case GraphModel::CompleteBipartite: return "complete-bipartite";
    case GraphModel::Cycle: return "cycle";
    case GraphModel::BoundedDegree: return "bounded-degree";
  }
  return "unknown";
}

std::optional<GraphModel> parse_graph_model(std::string_view text) noexcept {
  for (auto m : {GraphModel::Gnp, GraphModel::Complete, GraphModel::CompleteBipartite, GraphModel::Cycle,
                 GraphModel::BoundedDegree}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

Graph generate(GraphModel model, const GeneratorParams& params, std::uint64_t seed) {
  const auto n = params.n;
  switch (model) {
    case GraphModel::Gnp: {
      require_probability(params.p);
      GraphBuilder b(n);
      Coin coin(params.p, seed);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin.flip()) b.add_edge(u, v);
        }
      }
      return std::move(b).build();
    }
    case GraphModel::Complete: {
      GraphBuilder b(n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
      }
      return std::move(b).build();
    }
    case GraphModel::CompleteBipartite: {
      GraphBuilder b(n + params.m);
      for (Vertex u = 0; u < n; ++u) {
        for (std::size_t j = 0; j < params.m; ++j) b.add_edge(u, static_cast<Vertex>(n + j));
      }
      return std::move(b).build();
    }
    case GraphModel::Cycle: {
      if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
      GraphBuilder b(n);
      for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
      return std::move(b).build();
    }
    case GraphModel::BoundedDegree: {
      require_probability(params.p);
      const auto cap = params.max_degree;
      if (n == 0 ? cap != 0 : cap >= n) {
        throw InvalidInput("max degree " + std::to_string(cap) + " is impossible on " + std::to_string(n) +
                           " vertices");
      }
      GraphBuilder b(n);
      for (std::size_t v = 1; v <= cap; ++v) b.add_edge(0, static_cast<Vertex>(v));
      Coin coin(params.p, seed);
      for (Vertex u = 1; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin.flip() && b.degree(u) < cap && b.degree(v) < cap) b.add_edge(u, v);
        }
      }
      return std::move(b).build();
    }
  }
  throw InvalidInput("unknown graph model");
}

}  // namespace equipart
