#pragma once

#include <string_view>

#include "equipart/graph.hpp"

namespace equipart {

// Independent re-validation of structures against host adjacency. The
// finders run every result through these before returning it.

bool is_valid_path(AdjacencyRef host, const Path& path);
/// A cycle needs at least three distinct vertices.
bool is_valid_cycle(AdjacencyRef host, const Cycle& cycle);
bool is_valid_matching(AdjacencyRef host, const Matching& matching);

/// Throw InternalError naming `who` when the certificate does not hold.
void certify(AdjacencyRef host, const Path& path, std::string_view who);
void certify(AdjacencyRef host, const Cycle& cycle, std::string_view who);
void certify(AdjacencyRef host, const Matching& matching, std::string_view who);

}  // namespace equipart
