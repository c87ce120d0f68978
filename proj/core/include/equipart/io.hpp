#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/oracle.hpp"
#include "equipart/partition.hpp"
#include "equipart/verify.hpp"

namespace equipart {

enum class SourceFormat { EdgeList, Dimacs, Generated };

std::string_view to_string(SourceFormat format) noexcept;

/// A graph together with the bijection between external labels and the
/// internal ids 0..n-1. Labels only matter at the I/O boundary.
struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  SourceFormat format = SourceFormat::Generated;
  /// Non-fatal findings, such as a DIMACS edge count that disagrees with the header.
  std::vector<std::string> warnings;

  const std::string& label_of(Vertex v) const { return labels.at(v); }
  /// Throws InvalidInput for an unknown label.
  Vertex id_of(std::string_view label) const;
};

/// Wraps a graph with the labels "0".."n-1".
GraphDocument document_from_graph(Graph graph, SourceFormat format = SourceFormat::Generated);

/// Edge-list text: one "u v" pair per line, '#' starts a comment, labels are
/// arbitrary whitespace-free tokens numbered in order of first appearance.
/// An optional first line "n <count>" declares the vertex set as the labels
/// "0".."count-1" so isolated vertices survive; every later label must then
/// be one of them.
GraphDocument parse_edge_list(std::string_view text);

/// DIMACS "p edge n m" / "e u v" with 1-based ids. Labels are the DIMACS ids.
GraphDocument parse_dimacs(std::string_view text);

/// Writes the "n <count>" header when labels are exactly "0".."n-1"; otherwise
/// writes bare labeled edges and rejects isolated vertices, which that form
/// cannot express.
std::string serialize_edge_list(const GraphDocument& doc);

/// FNV-1a 64-bit digest of `bytes`, rendered as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

/// Everything `partition` records about one run.
struct RunRecord {
  std::string input_digest;
  std::string command;
  std::size_t k = 0;
  ForestMode mode = ForestMode::LinearForest;
  Partition partition;
  VerificationReport report;
  double partition_ms = 0.0;
  double verify_ms = 0.0;
};

/// {"n", "k", "mode", "case", "classes": [[labels...]...], "valid", ...}
/// with the run metadata alongside.
std::string to_json(const GraphDocument& doc, const RunRecord& record);
std::string to_json(const GraphDocument& doc, const VerificationReport& report);
std::string to_json(const GraphDocument& doc, const OracleResult& result);

/// Reads the "classes" (and optional "case") of a partition document.
/// Labels may be JSON strings or integers. Unknown labels are InvalidInput.
Partition partition_from_json(const GraphDocument& doc, std::string_view json);

/// Graphviz rendering with one fill color per class.
std::string to_dot(const GraphDocument& doc, const Partition& partition);

}  // namespace equipart
