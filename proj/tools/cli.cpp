#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "equipart/error.hpp"
#include "equipart/generate.hpp"
#include "equipart/io.hpp"
#include "equipart/oracle.hpp"
#include "equipart/partition.hpp"
#include "equipart/verify.hpp"

namespace equipart::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << text;
}

GraphDocument load_graph(const std::string& path, const std::string& format, std::string* raw = nullptr) {
  std::string text = read_file(path);
  GraphDocument doc = format == "dimacs" ? parse_dimacs(text) : parse_edge_list(text);
  if (raw) *raw = std::move(text);
  return doc;
}

ForestMode mode_from(const std::string& text) {
  // CLI11's check() already restricts the accepted strings.
  return parse_forest_mode(text).value_or(ForestMode::LinearForest);
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("EQUIPART_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("EQUIPART_SEED is not an unsigned integer");
    }
  }
  return seed;
}

struct Options {
  std::string input;
  std::string format = "edgelist";
  std::string mode = "linear-forest";
  std::size_t k = 0;
  std::string json_out;
  std::string dot_out;
  std::string partition_file;
  bool min_k = false;
  bool threshold_k = false;
  std::uint64_t budget = OracleOptions{}.node_budget;
  std::string model;
  GeneratorParams gen;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string suite = "default";
  std::vector<std::size_t> sizes{100, 1000, 10000};
};

int cmd_partition(const Options& o, std::ostream& out, std::ostream& err) {
  std::string raw;
  const GraphDocument doc = load_graph(o.input, o.format, &raw);
  for (const auto& w : doc.warnings) err << "warning: " << w << '\n';

  RunRecord record;
  record.command = "partition";
  record.input_digest = input_digest(raw);
  record.k = o.k;
  record.mode = mode_from(o.mode);

  auto start = Clock::now();
  record.partition = partition_equitable(doc.graph, o.k);
  record.partition_ms = elapsed_ms(start);
  start = Clock::now();
  record.report = verify_partition(doc.graph, record.partition, record.mode);
  record.verify_ms = elapsed_ms(start);

  const std::string json = to_json(doc, record) + "\n";
  if (o.json_out.empty()) {
    out << json;
  } else {
    write_file(o.json_out, json, out);
    out << to_string(record.partition.case_tag) << ": " << o.k << " classes, valid="
        << (record.report.valid ? "true" : "false") << '\n';
  }
  if (!o.dot_out.empty()) write_file(o.dot_out, to_dot(doc, record.partition), out);
  return record.report.valid ? kSuccess : kInternalError;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const GraphDocument doc = load_graph(o.input, o.format);
  const Partition p = partition_from_json(doc, read_file(o.partition_file));
  const auto report = verify_partition(doc.graph, p, mode_from(o.mode));
  out << to_json(doc, report) << '\n';
  return report.valid ? kSuccess : kNegative;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load_graph(o.input, o.format);
  const ForestMode mode = mode_from(o.mode);
  OracleOptions options;
  options.node_budget = o.budget;
  options.progress = [&err](std::uint64_t nodes) { err << "oracle: " << nodes << " nodes explored\n"; };

  if (o.min_k) {
    const auto r = compute_min_k(doc.graph, mode, options);
    out << "{\"min_k\": " << r.k << ", \"mode\": \"" << to_string(mode) << "\", \"nodes_explored\": "
        << r.nodes_explored << "}\n";
    return kSuccess;
  }
  if (o.threshold_k) {
    const auto r = compute_threshold_k(doc.graph, mode, options);
    out << "{\"threshold_k\": " << r.threshold << ", \"horizon\": " << r.horizon << ", \"mode\": \""
        << to_string(mode) << "\", \"nodes_explored\": " << r.nodes_explored << "}\n";
    return kSuccess;
  }
  const auto r = search_equitable_coloring(doc.graph, o.k, mode, options);
  out << to_json(doc, r) << '\n';
  return r.found ? kSuccess : kNegative;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream&) {
  const auto model = parse_graph_model(o.model);
  if (!model) throw InvalidInput("unknown model '" + o.model + "'");
  const Graph g = generate(*model, o.gen, effective_seed(o.seed));
  write_file(o.out, serialize_edge_list(document_from_graph(g)), out);
  return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream&) {
  if (o.suite != "default") throw InvalidInput("unknown bench suite '" + o.suite + "'");
  const auto seed = effective_seed(o.seed);
  out << std::left << std::setw(8) << "n" << std::setw(10) << "model" << std::setw(12) << "case" << std::setw(8)
      << "k" << std::setw(14) << "partition_ms" << std::setw(12) << "verify_ms" << std::setw(10) << "max_class"
      << "valid\n";
  bool all_valid = true;
  for (std::size_t n : o.sizes) {
    struct Instance {
      const char* name;
      Graph graph;
    };
    std::vector<Instance> instances;
    instances.push_back({"gnp-0.5", generate(GraphModel::Gnp, {.n = n, .p = 0.5}, seed)});
    instances.push_back({"gnp-0.2", generate(GraphModel::Gnp, {.n = n, .p = 0.2}, seed)});
    for (const auto& inst : instances) {
      const auto& g = inst.graph;
      const std::size_t bound = class_bound(g);
      std::vector<std::size_t> ks{bound};
      if (is_high_degree(g)) {
        for (std::size_t k : {(n + 2) / 3, (n + 1) / 2}) {
          if (k > ks.back()) ks.push_back(k);
        }
      }
      for (std::size_t k : ks) {
        auto start = Clock::now();
        const Partition p = partition_equitable(g, k);
        const double part_ms = elapsed_ms(start);
        start = Clock::now();
        const auto report = verify_partition(g, p, ForestMode::LinearForest);
        const double verify_ms = elapsed_ms(start);
        std::size_t largest = 0;
        for (const auto& cls : p.classes) largest = std::max(largest, cls.size());
        all_valid = all_valid && report.valid;
        out << std::setw(8) << n << std::setw(10) << inst.name << std::setw(12) << to_string(p.case_tag)
            << std::setw(8) << k << std::setw(14) << std::fixed << std::setprecision(2) << part_ms << std::setw(12)
            << verify_ms << std::setw(10) << largest << (report.valid ? "true" : "false") << '\n';
      }
    }
  }
  return all_valid ? kSuccess : kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable partition of graphs into induced linear forests", "equipart"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"edgelist", "dimacs"});
  const auto modes = CLI::IsMember({"linear-forest", "forest"});

  auto* partition = app.add_subcommand("partition", "Equitably partition a graph into k linear-forest classes");
  partition->add_option("--input", o.input, "Graph file")->required();
  partition->add_option("--format", o.format, "edgelist or dimacs")->check(formats);
  partition->add_option("--k", o.k, "Number of classes")->required();
  partition->add_option("--mode", o.mode, "Mode echoed and checked in the output")->check(modes);
  partition->add_option("--json", o.json_out, "Write the partition JSON here ('-' for stdout)");
  partition->add_option("--dot", o.dot_out, "Write a Graphviz rendering here");

  auto* verify = app.add_subcommand("verify", "Check a partition JSON against a graph");
  verify->add_option("--input", o.input, "Graph file")->required();
  verify->add_option("--format", o.format, "edgelist or dimacs")->check(formats);
  verify->add_option("--partition", o.partition_file, "Partition JSON")->required();
  verify->add_option("--mode", o.mode, "linear-forest or forest")->check(modes);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search on small graphs");
  oracle->add_option("--input", o.input, "Graph file")->required();
  oracle->add_option("--format", o.format, "edgelist or dimacs")->check(formats);
  auto* k_opt = oracle->add_option("--k", o.k, "Search for one k");
  auto* min_opt = oracle->add_flag("--min-k", o.min_k, "Smallest k admitting a coloring");
  auto* thr_opt = oracle->add_flag("--threshold-k", o.threshold_k, "Smallest k from which every k' works");
  k_opt->excludes(min_opt)->excludes(thr_opt);
  min_opt->excludes(thr_opt);
  oracle->add_option("--mode", o.mode, "linear-forest or forest")->check(modes);
  oracle->add_option("--budget", o.budget, "Node budget per search");

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("--model", o.model, "gnp|complete|complete-bipartite|cycle|bounded-degree")->required();
  gen->add_option("--n", o.gen.n, "Vertices (first side for complete-bipartite)");
  gen->add_option("--m", o.gen.m, "Second side for complete-bipartite");
  gen->add_option("--p", o.gen.p, "Edge probability");
  gen->add_option("--max-degree", o.gen.max_degree, "Maximum degree for bounded-degree");
  gen->add_option("--seed", o.seed, "RNG seed (EQUIPART_SEED overrides)");
  gen->add_option("--out", o.out, "Output file ('-' for stdout)")->required();

  auto* bench = app.add_subcommand("bench", "Time the constructor on seeded random graphs");
  bench->add_option("--suite", o.suite, "Benchmark suite");
  bench->add_option("--sizes", o.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench->add_option("--seed", o.seed, "RNG seed (EQUIPART_SEED overrides)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (partition->parsed()) return cmd_partition(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (oracle->parsed()) {
      if (!o.min_k && !o.threshold_k && k_opt->count() == 0) {
        err << "oracle: one of --k, --min-k, --threshold-k is required\n";
        return kInputError;
      }
      return cmd_oracle(o, out, err);
    }
    if (gen->parsed()) return cmd_gen(o, out, err);
    if (bench->parsed()) return cmd_bench(o, out, err);
  } catch (const InsufficientClasses& e) {
    err << "error: " << e.what() << " (need k >= " << e.bound() << ")\n";
    return kNegative;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace equipart::cli
