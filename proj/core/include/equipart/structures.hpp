#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart {

// Constructive structure finders. Every function returns a certified object
// (re-validated against host adjacency) or throws; none of them merely
// report existence. All of them accept a Graph or a ComplementView.

/// Evidence that a maximal path x_0..x_k closes into a cycle on its own
/// vertices: x_0 ~ x_{j+1} and x_j ~ x_k.
struct CrossingWitness {
  std::size_t j = 0;
  /// Indices i in 0..k-1 with x_0 ~ x_{i+1}.
  std::vector<std::size_t> s;
  /// Indices i in 0..k-1 with x_i ~ x_k.
  std::vector<std::size_t> t;
};

/// Vertex-disjoint paths on delta+1 and delta vertices.
struct DisjointPathPair {
  Path p1;
  Path p2;
};

/// Path from `seed` extended greedily at both ends (lowest-id free
/// neighbor first) until neither endpoint has a neighbor off the path.
Path grow_maximal_path(AdjacencyRef h, Vertex seed);

/// Path on at least 2*delta(h)+1 vertices by rotation-extension.
/// Requires h connected with delta(h) <= (n-1)/2; PreconditionFailed otherwise.
Path find_path_of_length_2delta(AdjacencyRef h);

/// Smallest j in S ∩ T for a maximal path on fewer than 2*delta+1 vertices.
/// PreconditionFailed if `p` is not a maximal path or is already long enough.
CrossingWitness find_crossing(AdjacencyRef h, const Path& p);

/// Cycle on at least delta(h)+1 vertices. Requires delta(h) >= 2.
Cycle find_long_cycle(AdjacencyRef h);

/// Same, confined to one connected component (given as its vertex list);
/// the degree condition applies to the component's own minimum degree.
Cycle find_long_cycle(AdjacencyRef h, std::span<const Vertex> component);

/// Matching with at least delta(h) edges.
/// Requires h disconnected, or connected with n > 2*delta(h).
Matching find_matching_size_delta(AdjacencyRef h);

/// Requires 2 <= delta(h) <= (n-1)/2.
DisjointPathPair find_two_disjoint_paths(AdjacencyRef h);

/// Spanning cycle under the Dirac condition delta(h) >= n/2, n >= 3.
Cycle find_hamiltonian_cycle(AdjacencyRef h);

}  // namespace equipart
