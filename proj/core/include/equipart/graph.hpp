#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace equipart {

using Vertex = std::uint32_t;

/// Unordered vertex pair. Stored with `first < second` once normalized.
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) noexcept {
  return (n + kWordBits - 1) / kWordBits;
}

/// Fixed-size dense bit set over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  std::size_t universe() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }

  bool contains(Vertex v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
  void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits)); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with dense bit-set rows.
/// Immutable once built; construct through `build_graph` or `GraphBuilder`.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::size_t degree(Vertex v) const noexcept { return degree_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  std::size_t words_per_row() const noexcept { return words_; }
  std::uint64_t row_word(Vertex v, std::size_t w) const noexcept { return bits_[v * words_ + w]; }

  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// Accumulates edges, rejecting loops and out-of-range endpoints, then
/// freezes into a Graph. Duplicate edges are ignored.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t vertex_count() const noexcept { return graph_.n_; }
  std::size_t degree(Vertex v) const noexcept { return graph_.degree_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept { return graph_.adjacent(u, v); }

  /// Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  Graph build() &&;

 private:
  Graph graph_;
};

/// Throws InvalidInput on a self-loop or an endpoint >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Read-only complement of a Graph, computed on demand from the base rows.
/// The base graph must outlive the view.
class ComplementView {
 public:
  explicit ComplementView(const Graph& base) noexcept : base_(&base) {}

  const Graph& base() const noexcept { return *base_; }
  std::size_t vertex_count() const noexcept { return base_->vertex_count(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return u != v && !base_->adjacent(u, v); }
  std::size_t degree(Vertex v) const noexcept { return vertex_count() - 1 - base_->degree(v); }
  std::size_t max_degree() const noexcept {
    return vertex_count() == 0 ? 0 : vertex_count() - 1 - base_->min_degree();
  }
  std::size_t min_degree() const noexcept {
    return vertex_count() == 0 ? 0 : vertex_count() - 1 - base_->max_degree();
  }
  std::size_t words_per_row() const noexcept { return base_->words_per_row(); }
  std::uint64_t row_word(Vertex v, std::size_t w) const noexcept {
    std::uint64_t bits = ~base_->row_word(v, w);
    const auto n = vertex_count();
    if (w == n / kWordBits) bits &= (std::uint64_t{1} << (n % kWordBits)) - 1;
    if (w == v / kWordBits) bits &= ~(std::uint64_t{1} << (v % kWordBits));
    return bits;
  }

 private:
  const Graph* base_;
};

inline ComplementView complement_view(const Graph& g) noexcept { return ComplementView(g); }

/// Materializes the complement. Meant for tests and small graphs.
Graph materialize(const ComplementView& view);

/// Non-owning handle over either a Graph or a ComplementView, so the
/// structure finders run unchanged on G and on G^c.
class AdjacencyRef {
 public:
  AdjacencyRef(const Graph& g) noexcept : graph_(&g), complement_(false) {}  // NOLINT
  AdjacencyRef(const ComplementView& v) noexcept  // NOLINT
      : graph_(&v.base()), complement_(true) {}

  bool is_complement() const noexcept { return complement_; }
  std::size_t vertex_count() const noexcept { return graph_->vertex_count(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return complement_ ? (u != v && !graph_->adjacent(u, v)) : graph_->adjacent(u, v);
  }
  std::size_t degree(Vertex v) const noexcept {
    return complement_ ? vertex_count() - 1 - graph_->degree(v) : graph_->degree(v);
  }
  std::size_t min_degree() const noexcept {
    if (!complement_) return graph_->min_degree();
    return vertex_count() == 0 ? 0 : vertex_count() - 1 - graph_->max_degree();
  }
  std::size_t max_degree() const noexcept {
    if (!complement_) return graph_->max_degree();
    return vertex_count() == 0 ? 0 : vertex_count() - 1 - graph_->min_degree();
  }

  std::size_t words_per_row() const noexcept { return graph_->words_per_row(); }
  std::uint64_t row_word(Vertex v, std::size_t w) const noexcept {
    return complement_ ? ComplementView(*graph_).row_word(v, w) : graph_->row_word(v, w);
  }

  std::vector<Vertex> neighbors(Vertex v) const;

 private:
  const Graph* graph_;
  bool complement_;
};

/// Ordered vertex sequence; consecutive vertices adjacent in the host.
struct Path {
  std::vector<Vertex> vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

/// Cyclic vertex sequence; last->first is also an edge.
struct Cycle {
  std::vector<Vertex> vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

struct Matching {
  std::vector<Edge> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(AdjacencyRef h);
bool is_connected(AdjacencyRef h);

struct InducedSubgraph {
  Graph graph;
  /// `original[i]` is the base vertex relabeled to i.
  std::vector<Vertex> original;
};

/// Subgraph on `vertices` (relabeled 0..|s|-1 in the given order) keeping
/// every base edge between them.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace equipart
