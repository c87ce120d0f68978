#include "equipart/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "equipart/error.hpp"
#include "equipart/verify.hpp"

namespace equipart {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) noexcept { return Mask{1} << v; }

class Search {
 public:
  Search(const Graph& g, std::size_t k, ForestMode mode, const OracleOptions& options)
      : n_(g.vertex_count()),
        k_(k),
        mode_(mode),
        options_(options),
        quota_(n_ / k),
        oversized_allowed_(n_ % k),
        adj_(n_, 0),
        members_(k, 0),
        sizes_(k, 0),
        class_degree_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
    }
    order_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) order_[v] = static_cast<Vertex>(v);
    // Fail-first: dense vertices are placed while choices are still few.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return place(0, 0); }
  std::uint64_t nodes() const noexcept { return nodes_; }

  Partition witness() const {
    Partition p;
    p.classes.resize(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      for (Mask m = members_[c]; m != 0; m &= m - 1) {
        p.classes[c].push_back(static_cast<Vertex>(std::countr_zero(m)));
      }
    }
    return p;
  }

 private:
  Mask component_of(Vertex u, Mask within) const {
    Mask reach = bit(u);
    Mask frontier = reach;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)] & within;
      frontier = next & ~reach;
      reach |= next;
    }
    return reach;
  }

  bool fits(std::size_t c) const {
    if (sizes_[c] < quota_) return true;
    return sizes_[c] == quota_ && oversized_ < oversized_allowed_;
  }

  bool keeps_forest(Vertex v, std::size_t c) const {
    const Mask inside = adj_[v] & members_[c];
    const int count = std::popcount(inside);
    if (mode_ == ForestMode::LinearForest) {
      if (count > 2) return false;
      for (Mask m = inside; m != 0; m &= m - 1) {
        if (class_degree_[std::countr_zero(m)] >= 2) return false;
      }
    }
    if (count < 2) return true;
    // v closes a cycle iff two of its class neighbors are already connected.
    Mask covered = 0;
    for (Mask m = inside; m != 0; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      if (covered & bit(u)) return false;
      covered |= component_of(u, members_[c]);
    }
    return true;
  }

  void count_node() {
    ++nodes_;
    if (nodes_ > options_.node_budget) throw BudgetExceeded(options_.node_budget);
    if (options_.progress && options_.progress_interval > 0 && nodes_ % options_.progress_interval == 0) {
      options_.progress(nodes_);
    }
  }

  bool place(std::size_t position, std::size_t open) {
    if (position == n_) return true;
    const Vertex v = order_[position];
    // Classes are interchangeable: v may open at most the next unused one.
    const std::size_t limit = std::min(open + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!fits(c) || !keeps_forest(v, c)) continue;
      count_node();

      const Mask inside = adj_[v] & members_[c];
      for (Mask m = inside; m != 0; m &= m - 1) ++class_degree_[std::countr_zero(m)];
      class_degree_[v] = static_cast<std::uint8_t>(std::popcount(inside));
      members_[c] |= bit(v);
      if (++sizes_[c] == quota_ + 1) ++oversized_;

      if (place(position + 1, c == open ? open + 1 : open)) return true;

      if (sizes_[c]-- == quota_ + 1) --oversized_;
      members_[c] &= ~bit(v);
      class_degree_[v] = 0;
      for (Mask m = inside; m != 0; m &= m - 1) --class_degree_[std::countr_zero(m)];
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  ForestMode mode_;
  const OracleOptions& options_;
  std::size_t quota_;
  std::size_t oversized_allowed_;
  std::size_t oversized_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Mask> adj_;
  std::vector<Mask> members_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint8_t> class_degree_;
};

}  // namespace

OracleResult search_equitable_coloring(const Graph& g, std::size_t k, ForestMode mode,
                                       const OracleOptions& options) {
  if (k == 0) throw InvalidInput("oracle: k must be at least 1");
  if (g.vertex_count() > kOracleMaxVertices) {
    throw InvalidInput("oracle: exhaustive search supports at most " + std::to_string(kOracleMaxVertices) +
                       " vertices");
  }
  Search search(g, k, mode, options);
  OracleResult result;
  result.k = k;
  result.mode = mode;
  result.found = search.run();
  result.nodes_explored = search.nodes();
  if (result.found) {
    result.witness = search.witness();
    if (!verify_partition(g, *result.witness, mode).valid) {
      throw InternalError("oracle: witness failed verification");
    }
  }
  return result;
}

MinKResult compute_min_k(const Graph& g, ForestMode mode, const OracleOptions& options) {
  MinKResult out;
  const std::size_t last = std::max<std::size_t>(g.vertex_count(), 1);
  for (std::size_t k = 1; k <= last; ++k) {
    const auto r = search_equitable_coloring(g, k, mode, options);
    out.nodes_explored += r.nodes_explored;
    if (r.found) {
      out.k = k;
      return out;
    }
  }
  // k = n always succeeds with singleton classes.
  throw InternalError("compute_min_k: no k in [1, n] admits a coloring");
}

ThresholdResult compute_threshold_k(const Graph& g, ForestMode mode, const OracleOptions& options) {
  ThresholdResult out;
  out.horizon = class_bound(g);
  out.threshold = 1;
  for (std::size_t k = out.horizon; k >= 1; --k) {
    const auto r = search_equitable_coloring(g, k, mode, options);
    out.nodes_explored += r.nodes_explored;
    if (!r.found) {
      out.threshold = k + 1;
      break;
    }
  }
  for (std::size_t k = out.horizon + 1; k <= g.vertex_count(); ++k) {
    if (!verify_partition(g, partition_equitable(g, k), mode).valid) {
      throw InternalError("compute_threshold_k: constructor failed beyond the horizon");
    }
  }
  return out;
}

}  // namespace equipart
