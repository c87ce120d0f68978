#include "equipart/structures.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "equipart/certificate.hpp"
#include "equipart/error.hpp"

namespace equipart {

namespace {

/// Path under construction plus its membership bit set.
class GrowingPath {
 public:
  explicit GrowingPath(AdjacencyRef h) : h_(h), on_(h.vertex_count()) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const VertexSet& members() const noexcept { return on_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  void reset(std::vector<Vertex> vertices) {
    on_.clear();
    vertices_ = std::move(vertices);
    for (Vertex v : vertices_) on_.insert(v);
  }

  // Extending one end never disturbs maximality of the other, so one pass
  // per end leaves both endpoints maximal. The seed's orientation is kept.
  void make_maximal() {
    extend_back();
    std::reverse(vertices_.begin(), vertices_.end());
    extend_back();
    std::reverse(vertices_.begin(), vertices_.end());
  }

  std::optional<Vertex> first_free_neighbor(Vertex v) const {
    for (std::size_t w = 0; w < h_.words_per_row(); ++w) {
      const std::uint64_t bits = h_.row_word(v, w) & ~on_.word(w);
      if (bits != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
    }
    return std::nullopt;
  }

  /// Smallest-id vertex off the path with a neighbor on it.
  std::optional<Vertex> first_attachable_outside() const {
    const auto n = h_.vertex_count();
    const auto words = h_.words_per_row();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t outside = ~on_.word(w);
      if (w == n / kWordBits) outside &= (std::uint64_t{1} << (n % kWordBits)) - 1;
      while (outside != 0) {
        const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(outside));
        outside &= outside - 1;
        for (std::size_t x = 0; x < words; ++x) {
          if (h_.row_word(y, x) & on_.word(x)) return y;
        }
      }
    }
    return std::nullopt;
  }

 private:
  void extend_back() {
    while (auto next = first_free_neighbor(vertices_.back())) {
      vertices_.push_back(*next);
      on_.insert(*next);
    }
  }

  AdjacencyRef h_;
  VertexSet on_;
  std::vector<Vertex> vertices_;
};

Vertex max_degree_vertex(AdjacencyRef h, std::span<const Vertex> candidates) {
  Vertex best = candidates.front();
  for (Vertex v : candidates) {
    if (h.degree(v) > h.degree(best) || (h.degree(v) == h.degree(best) && v < best)) best = v;
  }
  return best;
}

Vertex max_degree_vertex(AdjacencyRef h) {
  Vertex best = 0;
  for (Vertex v = 1; v < h.vertex_count(); ++v) {
    if (h.degree(v) > h.degree(best)) best = v;
  }
  return best;
}

/// Smallest j with x_0 ~ x_{j+1} and x_j ~ x_k.
std::optional<std::size_t> smallest_crossing(AdjacencyRef h, const std::vector<Vertex>& p) {
  const std::size_t k = p.size() - 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (h.adjacent(p.front(), p[j + 1]) && h.adjacent(p[j], p.back())) return j;
  }
  return std::nullopt;
}

/// x_0 x_{j+1} ... x_k x_j x_{j-1} ... x_1, read cyclically.
std::vector<Vertex> rotate_to_cycle(const std::vector<Vertex>& p, std::size_t j) {
  std::vector<Vertex> cycle;
  cycle.reserve(p.size());
  cycle.push_back(p.front());
  cycle.insert(cycle.end(), p.begin() + static_cast<std::ptrdiff_t>(j) + 1, p.end());
  for (std::size_t i = j; i >= 1; --i) cycle.push_back(p[i]);
  return cycle;
}

/// Opens `cycle` at the first position adjacent to `y` and prepends y.
std::vector<Vertex> unfold_with(AdjacencyRef h, const std::vector<Vertex>& cycle, Vertex y) {
  std::size_t r = 0;
  while (r < cycle.size() && !h.adjacent(y, cycle[r])) ++r;
  if (r == cycle.size()) throw InternalError("rotation-extension: attachment vertex has no cycle neighbor");
  std::vector<Vertex> path;
  path.reserve(cycle.size() + 1);
  path.push_back(y);
  path.insert(path.end(), cycle.begin() + static_cast<std::ptrdiff_t>(r), cycle.end());
  path.insert(path.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(r));
  return path;
}

/// One rotation-extension step on a maximal path: close it into a cycle on
/// the same vertices, then absorb an outside neighbor. Returns the cycle
/// when no outside vertex attaches.
std::optional<std::vector<Vertex>> rotate_and_extend(AdjacencyRef h, GrowingPath& path,
                                                     std::string_view who) {
  const auto before = path.size();
  const auto j = smallest_crossing(h, path.vertices());
  if (!j) throw InternalError(std::string(who) + ": maximal path has no crossing pair");
  auto cycle = rotate_to_cycle(path.vertices(), *j);
  const auto y = path.first_attachable_outside();
  if (!y) return cycle;
  path.reset(unfold_with(h, cycle, *y));
  path.make_maximal();
  if (path.size() <= before) throw InternalError(std::string(who) + ": path failed to grow");
  return std::nullopt;
}

Cycle long_cycle_from(AdjacencyRef h, Vertex seed) {
  const Path p = grow_maximal_path(h, seed);
  const auto& xs = p.vertices;
  std::size_t last = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (h.adjacent(xs.front(), xs[i])) last = i;
  }
  Cycle cycle{std::vector<Vertex>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(last) + 1)};
  certify(h, cycle, "find_long_cycle");
  return cycle;
}

}  // namespace

Path grow_maximal_path(AdjacencyRef h, Vertex seed) {
  if (seed >= h.vertex_count()) throw InvalidInput("seed vertex out of range");
  GrowingPath path(h);
  path.reset({seed});
  path.make_maximal();
  Path out{path.vertices()};
  certify(h, out, "grow_maximal_path");
  return out;
}

Path find_path_of_length_2delta(AdjacencyRef h) {
  const auto n = h.vertex_count();
  if (n == 0) throw PreconditionFailed("find_path_of_length_2delta: empty host");
  const auto delta = h.min_degree();
  if (2 * delta > n - 1) {
    throw PreconditionFailed("find_path_of_length_2delta: minimum degree exceeds (n-1)/2");
  }
  if (!is_connected(h)) throw PreconditionFailed("find_path_of_length_2delta: host is disconnected");

  const std::size_t target = 2 * delta + 1;
  GrowingPath path(h);
  path.reset({max_degree_vertex(h)});
  path.make_maximal();
  while (path.size() < target) {
    // Connected and n >= target > |path|, so some outside vertex attaches.
    if (rotate_and_extend(h, path, "find_path_of_length_2delta")) {
      throw InternalError("find_path_of_length_2delta: no outside vertex attaches to the cycle");
    }
  }
  Path out{path.vertices()};
  certify(h, out, "find_path_of_length_2delta");
  return out;
}

CrossingWitness find_crossing(AdjacencyRef h, const Path& p) {
  if (p.vertices.empty() || !is_valid_path(h, p)) {
    throw PreconditionFailed("find_crossing: argument is not a path in the host");
  }
  const auto delta = h.min_degree();
  if (p.size() >= 2 * delta + 1) {
    throw PreconditionFailed("find_crossing: path already has 2*delta+1 vertices");
  }
  GrowingPath probe(h);
  probe.reset(p.vertices);
  if (probe.first_free_neighbor(p.vertices.front()) || probe.first_free_neighbor(p.vertices.back())) {
    throw PreconditionFailed("find_crossing: path is not maximal");
  }

  const auto& xs = p.vertices;
  const std::size_t k = xs.size() - 1;
  CrossingWitness witness;
  for (std::size_t i = 0; i < k; ++i) {
    if (h.adjacent(xs.front(), xs[i + 1])) witness.s.push_back(i);
    if (h.adjacent(xs[i], xs.back())) witness.t.push_back(i);
  }
  std::vector<std::size_t> both;
  std::set_intersection(witness.s.begin(), witness.s.end(), witness.t.begin(), witness.t.end(),
                        std::back_inserter(both));
  if (both.empty()) throw InternalError("find_crossing: S and T are disjoint");
  witness.j = both.front();
  return witness;
}

Cycle find_long_cycle(AdjacencyRef h) {
  if (h.vertex_count() == 0 || h.min_degree() < 2) {
    throw PreconditionFailed("find_long_cycle: minimum degree below 2");
  }
  return long_cycle_from(h, max_degree_vertex(h));
}

Cycle find_long_cycle(AdjacencyRef h, std::span<const Vertex> component) {
  if (component.empty()) throw PreconditionFailed("find_long_cycle: empty component");
  for (Vertex v : component) {
    if (v >= h.vertex_count()) throw InvalidInput("find_long_cycle: component vertex out of range");
    if (h.degree(v) < 2) throw PreconditionFailed("find_long_cycle: component minimum degree below 2");
  }
  return long_cycle_from(h, max_degree_vertex(h, component));
}

Matching find_matching_size_delta(AdjacencyRef h) {
  const auto n = h.vertex_count();
  const auto delta = h.min_degree();
  const auto components = connected_components(h);
  Matching m;

  if (components.size() <= 1) {
    if (n <= 2 * delta) throw PreconditionFailed("find_matching_size_delta: connected host with n <= 2*delta");
    const Path p = find_path_of_length_2delta(h);
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) m.edges.emplace_back(p.vertices[i], p.vertices[i + 1]);
  } else if (delta >= 2) {
    // Two components, alternating edges of a long cycle in each.
    const Cycle c1 = find_long_cycle(h, components[0]);
    const Cycle c2 = find_long_cycle(h, components[1]);
    const std::size_t from_first = (delta + 1) / 2;
    const std::size_t from_second = delta / 2;
    for (std::size_t i = 0; i < from_first; ++i) {
      m.edges.emplace_back(c1.vertices[2 * i], c1.vertices[2 * i + 1]);
    }
    for (std::size_t i = 0; i < from_second; ++i) {
      m.edges.emplace_back(c2.vertices[2 * i], c2.vertices[2 * i + 1]);
    }
  } else {
    for (Vertex u = 0; u < n && m.edges.empty(); ++u) {
      for (Vertex v : h.neighbors(u)) {
        m.edges.emplace_back(u, v);
        break;
      }
    }
  }

  certify(h, m, "find_matching_size_delta");
  if (m.size() < delta) throw InternalError("find_matching_size_delta: matching smaller than delta");
  return m;
}

DisjointPathPair find_two_disjoint_paths(AdjacencyRef h) {
  const auto n = h.vertex_count();
  const auto delta = h.min_degree();
  if (n == 0 || delta < 2 || 2 * delta > n - 1) {
    throw PreconditionFailed("find_two_disjoint_paths: requires 2 <= delta <= (n-1)/2");
  }
  const auto components = connected_components(h);
  const auto d = static_cast<std::ptrdiff_t>(delta);
  DisjointPathPair pair;
  if (components.size() == 1) {
    const Path p = find_path_of_length_2delta(h);
    pair.p1.vertices.assign(p.vertices.begin(), p.vertices.begin() + d + 1);
    pair.p2.vertices.assign(p.vertices.begin() + d + 1, p.vertices.begin() + 2 * d + 1);
  } else {
    const Cycle c1 = find_long_cycle(h, components[0]);
    const Cycle c2 = find_long_cycle(h, components[1]);
    pair.p1.vertices.assign(c1.vertices.begin(), c1.vertices.begin() + d + 1);
    pair.p2.vertices.assign(c2.vertices.begin(), c2.vertices.begin() + d);
  }

  certify(h, pair.p1, "find_two_disjoint_paths");
  certify(h, pair.p2, "find_two_disjoint_paths");
  VertexSet seen(n);
  for (Vertex v : pair.p1.vertices) seen.insert(v);
  for (Vertex v : pair.p2.vertices) {
    if (seen.contains(v)) throw InternalError("find_two_disjoint_paths: paths intersect");
  }
  return pair;
}

Cycle find_hamiltonian_cycle(AdjacencyRef h) {
  const auto n = h.vertex_count();
  if (n < 3 || 2 * h.min_degree() < n) {
    throw PreconditionFailed("find_hamiltonian_cycle: requires n >= 3 and delta >= n/2");
  }
  GrowingPath path(h);
  path.reset({max_degree_vertex(h)});
  path.make_maximal();
  Cycle cycle;
  for (;;) {
    const auto& xs = path.vertices();
    if (xs.size() == n && h.adjacent(xs.front(), xs.back())) {
      cycle.vertices = xs;
      break;
    }
    // deg(x_0) + deg(x_k) >= n > k guarantees a crossing on a maximal path.
    if (auto closed = rotate_and_extend(h, path, "find_hamiltonian_cycle")) {
      if (closed->size() != n) {
        throw InternalError("find_hamiltonian_cycle: cycle is not spanning and nothing attaches");
      }
      cycle.vertices = std::move(*closed);
      break;
    }
  }
  certify(h, cycle, "find_hamiltonian_cycle");
  if (cycle.size() != n) throw InternalError("find_hamiltonian_cycle: cycle is not spanning");
  return cycle;
}

}  // namespace equipart
