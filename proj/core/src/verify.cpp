#include "equipart/verify.hpp"

#include <numeric>

namespace equipart {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// False when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool max_degree_at_most_two(const Graph& h) {
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) > 2) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::Size: return "size";
    case ViolationKind::Cycle: return "cycle";
    case ViolationKind::Degree: return "degree";
    case ViolationKind::Coverage: return "coverage";
    case ViolationKind::Overlap: return "overlap";
  }
  return "unknown";
}

bool is_forest(const Graph& h) {
  DisjointSets sets(h.vertex_count());
  for (auto [u, v] : h.edges()) {
    if (!sets.unite(u, v)) return false;
  }
  return true;
}

bool is_linear_forest(const Graph& h) { return max_degree_at_most_two(h) && is_forest(h); }

VerificationReport verify_partition(const Graph& g, const Partition& p, ForestMode mode) {
  const auto n = g.vertex_count();
  const auto k = p.k();
  VerificationReport report;
  report.case_tag = p.case_tag;

  auto flag = [&](std::optional<std::size_t> cls, ViolationKind kind, std::string detail) {
    report.violations.push_back({cls, kind, std::move(detail)});
  };

  std::vector<char> seen(n, 0);
  for (std::size_t c = 0; c < k; ++c) {
    for (Vertex v : p.classes[c]) {
      if (v >= n) {
        flag(c, ViolationKind::Coverage, "vertex " + std::to_string(v) + " is not in the graph");
      } else if (seen[v]) {
        flag(c, ViolationKind::Overlap, "vertex " + std::to_string(v) + " appears more than once");
      } else {
        seen[v] = 1;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) flag(std::nullopt, ViolationKind::Coverage, "vertex " + std::to_string(v) + " is uncovered");
  }

  if (k == 0) {
    if (n > 0) flag(std::nullopt, ViolationKind::Size, "partition has no classes");
  } else {
    const std::size_t lo = n / k;
    const std::size_t hi = (n + k - 1) / k;
    for (std::size_t c = 0; c < k; ++c) {
      const auto size = p.classes[c].size();
      if (size < lo || size > hi) {
        flag(c, ViolationKind::Size,
             "size " + std::to_string(size) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
    }
  }

  // stamp[v] = last class that listed v, so repeats inside a class collapse.
  std::vector<std::size_t> stamp(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = p.classes[c];
    report.class_sizes.push_back(cls.size());
    std::vector<Vertex> members;
    members.reserve(cls.size());
    for (Vertex v : cls) {
      if (v < n && stamp[v] != c) {
        stamp[v] = c;
        members.push_back(v);
      }
    }
    const Graph induced = induced_subgraph(g, members).graph;
    if (mode == ForestMode::LinearForest && !max_degree_at_most_two(induced)) {
      flag(c, ViolationKind::Degree, "induced vertex of degree above 2");
    }
    if (!is_forest(induced)) flag(c, ViolationKind::Cycle, "induced subgraph contains a cycle");
  }

  report.valid = report.violations.empty();
  return report;
}

}  // namespace equipart
