#include "equipart/graph.hpp"

#include <algorithm>
#include <string>

#include "equipart/error.hpp"

namespace equipart {

namespace {

template <typename Host>
std::vector<Vertex> collect_row(const Host& h, Vertex v) {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < h.words_per_row(); ++w) {
    std::uint64_t bits = h.row_word(v, w);
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace

std::vector<Vertex> Graph::neighbors(Vertex v) const { return collect_row(*this, v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  graph_.n_ = n;
  graph_.words_ = words_for(n);
  graph_.bits_.assign(n * graph_.words_, 0);
  graph_.degree_.assign(n, 0);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = graph_.n_;
  if (u >= n || v >= n) {
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (graph_.adjacent(u, v)) return false;
  const auto w = graph_.words_;
  graph_.bits_[u * w + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  graph_.bits_[v * w + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  ++graph_.degree_[u];
  ++graph_.degree_[v];
  ++graph_.m_;
  return true;
}

Graph GraphBuilder::build() && {
  if (!graph_.degree_.empty()) {
    auto [lo, hi] = std::minmax_element(graph_.degree_.begin(), graph_.degree_.end());
    graph_.min_degree_ = *lo;
    graph_.max_degree_ = *hi;
  }
  return std::move(graph_);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (auto [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

Graph materialize(const ComplementView& view) {
  const auto n = view.vertex_count();
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (view.adjacent(u, v)) builder.add_edge(u, v);
    }
  }
  return std::move(builder).build();
}

std::vector<Vertex> AdjacencyRef::neighbors(Vertex v) const { return collect_row(*this, v); }

std::vector<std::vector<Vertex>> connected_components(AdjacencyRef h) {
  const auto n = h.vertex_count();
  const auto words = h.words_per_row();
  // Bits still unvisited; a BFS frontier pulls whole words out of it.
  std::vector<std::uint64_t> unvisited(words, ~std::uint64_t{0});
  if (n % kWordBits != 0 && words > 0) unvisited.back() = (std::uint64_t{1} << (n % kWordBits)) - 1;

  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < n; ++start) {
    if (!((unvisited[start / kWordBits] >> (start % kWordBits)) & 1U)) continue;
    unvisited[start / kWordBits] &= ~(std::uint64_t{1} << (start % kWordBits));
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t fresh = h.row_word(u, w) & unvisited[w];
        unvisited[w] &= ~fresh;
        while (fresh != 0) {
          queue.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(fresh)));
          fresh &= fresh - 1;
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    components.push_back(queue);
  }
  return components;
}

bool is_connected(AdjacencyRef h) { return connected_components(h).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder builder(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {std::move(builder).build(), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

}  // namespace equipart
