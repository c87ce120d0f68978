#include "equipart/certificate.hpp"

#include <string>
#include <vector>

#include "equipart/error.hpp"

namespace equipart {

namespace {

bool all_distinct_in_range(std::size_t n, const std::vector<Vertex>& vertices) {
  std::vector<char> seen(n, 0);
  for (Vertex v : vertices) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

bool is_valid_path(AdjacencyRef host, const Path& path) {
  const auto& vs = path.vertices;
  if (!all_distinct_in_range(host.vertex_count(), vs)) return false;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (!host.adjacent(vs[i - 1], vs[i])) return false;
  }
  return true;
}

bool is_valid_cycle(AdjacencyRef host, const Cycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) return false;
  if (!is_valid_path(host, Path{vs})) return false;
  return host.adjacent(vs.back(), vs.front());
}

bool is_valid_matching(AdjacencyRef host, const Matching& matching) {
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * matching.size());
  for (auto [u, v] : matching.edges) {
    if (u >= host.vertex_count() || v >= host.vertex_count() || !host.adjacent(u, v)) return false;
    endpoints.push_back(u);
    endpoints.push_back(v);
  }
  return all_distinct_in_range(host.vertex_count(), endpoints);
}

void certify(AdjacencyRef host, const Path& path, std::string_view who) {
  if (!is_valid_path(host, path)) throw InternalError(std::string(who) + ": invalid path certificate");
}

void certify(AdjacencyRef host, const Cycle& cycle, std::string_view who) {
  if (!is_valid_cycle(host, cycle)) throw InternalError(std::string(who) + ": invalid cycle certificate");
}

void certify(AdjacencyRef host, const Matching& matching, std::string_view who) {
  if (!is_valid_matching(host, matching)) {
    throw InternalError(std::string(who) + ": invalid matching certificate");
  }
}

}  // namespace equipart
