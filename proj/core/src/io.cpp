#include "equipart/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "equipart/error.hpp"

namespace equipart {

namespace {

using nlohmann::json;

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

class LabelTable {
 public:
  Vertex intern(std::string_view label) {
    auto [it, inserted] = doc_.ids.try_emplace(std::string(label), static_cast<Vertex>(doc_.labels.size()));
    if (inserted) doc_.labels.emplace_back(label);
    return it->second;
  }
  std::optional<Vertex> find(std::string_view label) const {
    const auto it = doc_.ids.find(std::string(label));
    if (it == doc_.ids.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const noexcept { return doc_.labels.size(); }
  GraphDocument& doc() noexcept { return doc_; }

 private:
  GraphDocument doc_;
};

std::vector<std::string> class_labels(const GraphDocument& doc, const std::vector<Vertex>& cls) {
  std::vector<std::string> out;
  out.reserve(cls.size());
  for (Vertex v : cls) out.push_back(v < doc.labels.size() ? doc.labels[v] : std::to_string(v));
  return out;
}

json violations_json(const VerificationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations) {
    out.push_back({{"class", v.class_index ? json(*v.class_index) : json(nullptr)},
                   {"reason", std::string(to_string(v.kind))},
                   {"detail", v.detail}});
  }
  return out;
}

json classes_json(const GraphDocument& doc, const Partition& p) {
  json out = json::array();
  for (const auto& cls : p.classes) out.push_back(class_labels(doc, cls));
  return out;
}

json case_json(CaseTag tag) {
  return tag == CaseTag::Unspecified ? json(nullptr) : json(std::string(to_string(tag)));
}

}  // namespace

std::string_view to_string(SourceFormat format) noexcept {
  switch (format) {
    case SourceFormat::EdgeList: return "edgelist";
    case SourceFormat::Dimacs: return "dimacs";
    case SourceFormat::Generated: break;
  }
  return "generated";
}

Vertex GraphDocument::id_of(std::string_view label) const {
  const auto it = ids.find(std::string(label));
  if (it == ids.end()) throw InvalidInput("unknown vertex label '" + std::string(label) + "'");
  return it->second;
}

GraphDocument document_from_graph(Graph graph, SourceFormat format) {
  GraphDocument doc;
  doc.format = format;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    doc.labels.push_back(std::to_string(v));
    doc.ids.emplace(doc.labels.back(), static_cast<Vertex>(v));
  }
  doc.graph = std::move(graph);
  return doc;
}

GraphDocument parse_edge_list(std::string_view text) {
  LabelTable table;
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  bool seen_content = false;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) return;
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      seen_content = true;
      declared = parse_count(tokens[1]);
      if (!declared) throw ParseError(line_no, "vertex count in header is not a non-negative integer");
      for (std::size_t v = 0; v < *declared; ++v) table.intern(std::to_string(v));
      return;
    }
    seen_content = true;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex labels");
    if (tokens[0] == tokens[1]) {
      throw InvalidInput("line " + std::to_string(line_no) + ": self-loop at '" + std::string(tokens[0]) + "'");
    }
    Vertex ends[2];
    for (int i = 0; i < 2; ++i) {
      if (declared) {
        const auto id = table.find(tokens[i]);
        if (!id) {
          throw InvalidInput("line " + std::to_string(line_no) + ": label '" + std::string(tokens[i]) +
                             "' is outside the declared vertex set");
        }
        ends[i] = *id;
      } else {
        ends[i] = table.intern(tokens[i]);
      }
    }
    edges.emplace_back(ends[0], ends[1]);
  });

  GraphDocument& doc = table.doc();
  doc.graph = build_graph(table.size(), edges);
  doc.format = SourceFormat::EdgeList;
  return std::move(doc);
}

GraphDocument parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;
  std::vector<Edge> edges;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2]);
      const auto m = parse_count(tokens[3]);
      if (!n || !m) throw ParseError(line_no, "vertex and edge counts must be non-negative integers");
      declared_edges = *m;
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "edge line before the 'p edge' header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = parse_count(tokens[1]);
      const auto v = parse_count(tokens[2]);
      if (!u || !v) throw ParseError(line_no, "vertex ids must be positive integers");
      if (*u == 0 || *v == 0 || *u > *n || *v > *n) {
        throw InvalidInput("line " + std::to_string(line_no) + ": vertex id outside 1.." + std::to_string(*n));
      }
      if (*u == *v) throw InvalidInput("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(*u));
      edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
      ++edge_lines;
      return;
    }
    throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
  });

  if (!n) throw ParseError(0, "missing 'p edge' header");
  GraphDocument doc;
  doc.format = SourceFormat::Dimacs;
  for (std::size_t v = 0; v < *n; ++v) {
    doc.labels.push_back(std::to_string(v + 1));
    doc.ids.emplace(doc.labels.back(), static_cast<Vertex>(v));
  }
  doc.graph = build_graph(*n, edges);
  if (edge_lines != declared_edges) {
    doc.warnings.push_back("header declares " + std::to_string(declared_edges) + " edges but " +
                           std::to_string(edge_lines) + " edge lines were read");
  }
  return doc;
}

std::string serialize_edge_list(const GraphDocument& doc) {
  const auto n = doc.graph.vertex_count();
  bool canonical = doc.labels.size() == n;
  for (std::size_t v = 0; canonical && v < n; ++v) canonical = doc.labels[v] == std::to_string(v);

  std::ostringstream out;
  if (canonical) {
    out << "n " << n << '\n';
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& label = doc.labels.at(v);
      if (label.empty() || label.find_first_of(" \t\r\n#") != std::string::npos) {
        throw InvalidInput("label '" + label + "' cannot be written to an edge list");
      }
      if (doc.graph.degree(static_cast<Vertex>(v)) == 0) {
        throw InvalidInput("isolated vertex '" + label + "' needs numeric labels 0..n-1 to be written");
      }
    }
  }
  for (auto [u, v] : doc.graph.edges()) out << doc.labels[u] << ' ' << doc.labels[v] << '\n';
  return out.str();
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

std::string to_json(const GraphDocument& doc, const RunRecord& record) {
  json out;
  out["n"] = doc.graph.vertex_count();
  out["k"] = record.k;
  out["mode"] = std::string(to_string(record.mode));
  out["case"] = case_json(record.partition.case_tag);
  out["classes"] = classes_json(doc, record.partition);
  out["valid"] = record.report.valid;
  out["class_sizes"] = record.report.class_sizes;
  out["violations"] = violations_json(record.report);
  out["command"] = record.command;
  out["input_digest"] = record.input_digest;
  out["timings_ms"] = {{"partition", record.partition_ms}, {"verify", record.verify_ms}};
  return out.dump(2);
}

std::string to_json(const GraphDocument&, const VerificationReport& report) {
  json out;
  out["valid"] = report.valid;
  out["class_sizes"] = report.class_sizes;
  out["violations"] = violations_json(report);
  out["case"] = case_json(report.case_tag);
  return out.dump(2);
}

std::string to_json(const GraphDocument& doc, const OracleResult& result) {
  json out;
  out["n"] = doc.graph.vertex_count();
  out["k"] = result.k;
  out["mode"] = std::string(to_string(result.mode));
  out["found"] = result.found;
  out["nodes_explored"] = result.nodes_explored;
  out["witness"] = result.witness ? classes_json(doc, *result.witness) : json(nullptr);
  return out.dump(2);
}

Partition partition_from_json(const GraphDocument& doc, std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("partition JSON: ") + e.what());
  }
  if (!in.is_object() || !in.contains("classes") || !in["classes"].is_array()) {
    throw InvalidInput("partition JSON needs a \"classes\" array");
  }
  Partition p;
  for (const auto& cls : in["classes"]) {
    if (!cls.is_array()) throw InvalidInput("each partition class must be an array of labels");
    auto& out = p.classes.emplace_back();
    for (const auto& label : cls) {
      if (label.is_string()) {
        out.push_back(doc.id_of(label.get<std::string>()));
      } else if (label.is_number_integer()) {
        out.push_back(doc.id_of(std::to_string(label.get<long long>())));
      } else {
        throw InvalidInput("partition labels must be strings or integers");
      }
    }
  }
  if (in.contains("case") && in["case"].is_string()) {
    p.case_tag = parse_case_tag(in["case"].get<std::string>()).value_or(CaseTag::Unspecified);
  }
  return p;
}

std::string to_dot(const GraphDocument& doc, const Partition& partition) {
  static constexpr const char* kPalette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
                                             "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
                                             "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000"};
  constexpr std::size_t kColors = std::size(kPalette);
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (std::size_t c = 0; c < partition.k(); ++c) {
    for (Vertex v : partition.classes[c]) {
      out << "  " << json(doc.label_of(v)).dump() << " [fillcolor=\"" << kPalette[c % kColors]
          << "\", tooltip=\"class " << c << "\"];\n";
    }
  }
  for (auto [u, v] : doc.graph.edges()) {
    out << "  " << json(doc.label_of(u)).dump() << " -- " << json(doc.label_of(v)).dump() << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace equipart
