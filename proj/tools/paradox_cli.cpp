// Command-line front end: analyze, generate, simulate, pipeline, verify.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "paradox/error.hpp"
#include "paradox/gaps.hpp"
#include "paradox/generators.hpp"
#include "paradox/ingest.hpp"
#include "paradox/property_suite.hpp"
#include "paradox/report_io.hpp"
#include "paradox/simulation.hpp"

namespace fs = std::filesystem;
using namespace paradox;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

// "-" writes to stdout.
template <typename Writer>
void emit(const std::string& target, Writer&& write) {
  if (target == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out = open_output(target);
  write(out);
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

/// "a:b" (inclusive range), "a,b,c" or a single integer.
std::vector<int> parse_conditions(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto colon = text.find(':', 1); colon != std::string::npos) {
      const int lo = std::stoi(text.substr(0, colon));
      const int hi = std::stoi(text.substr(colon + 1));
      if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty condition range " + text);
      for (int j = lo; j <= hi; ++j) out.push_back(j);
      return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse conditions '" + text + "'");
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no conditions given");
  return out;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PARADOX_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidArgument, std::string("PARADOX_THREADS must be a positive integer, got '") + env + "'");
  }
  return 0;
}

struct AnalyzeArgs {
  std::string edges;
  std::string attrs;
  std::string attr_col;
  std::string missing;
  bool lenient = false;
  bool strict_connected = false;
  std::string json;
  std::string csv;
};

int run_analyze(const AnalyzeArgs& args) {
  LoadOptions options;
  options.lenient = args.lenient;
  options.missing_token = args.missing;
  const std::optional<fs::path> meta = args.attrs.empty() ? std::nullopt : std::optional<fs::path>(args.attrs);
  LoadedGraph loaded = load_graph(args.edges, meta, options);

  Graph g = loaded.graph;
  if (meta) {
    std::string column = args.attr_col;
    if (column.empty()) {
      if (loaded.metadata.columns().size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "attribute file has several columns; choose one with --attr-col");
      }
      column = loaded.metadata.columns().front();
    }
    g = g.with_attributes(numeric_column(g, loaded.metadata, column));
  }

  AnalysisView view;
  view.graph = &g;
  view.graph_class = classify(g);
  view.dropped_isolates = loaded.dropped_isolates;
  if (args.strict_connected && !view.graph_class.connected) throw Error(ErrorCode::InvalidArgument, "graph not connected");
  view.analysis = analyze(g);

  if (!args.json.empty()) emit(args.json, [&](std::ostream& out) { write_json(out, analysis_to_json(view)); });
  if (!args.csv.empty()) emit(args.csv, [&](std::ostream& out) { write_analysis_csv(out, view); });
  if (args.json != "-" && args.csv != "-") write_analysis_table(std::cout, view);
  if (!view.analysis.consistency.ok()) {
    std::cerr << "error: sign rules violated\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

struct GnpArgs {
  std::size_t n = 300;
  double p = 0.02;
  int max_weight = 10;
  std::uint64_t seed = 0;
  std::optional<int> condition;
  std::string out;
  std::string attrs_out;
};

int run_generate_gnp(const GnpArgs& args) {
  Graph g;
  std::size_t attempt = 0;
  for (;; ++attempt) {
    if (attempt >= 10'000) throw Error(ErrorCode::RetryLimitExceeded, "no acceptable G(n,p) draw in 10000 attempts");
    g = generate_gnp({args.n, args.p, args.max_weight, derive_seed(args.seed, attempt, Stream::Topology)});
    if (accept_graph(g).accepted) break;
  }
  emit(args.out, [&](std::ostream& out) { write_edge_list(out, g); });
  if (args.condition && !args.attrs_out.empty()) {
    const std::vector<double> z = draw_standard_normal(g.node_count(), derive_seed(args.seed, 0, Stream::Attributes));
    const std::vector<double> a = shift_attributes(z, node_quantities(g).degree, *args.condition);
    NodeTable table(g.node_count(), {"a"});
    for (NodeId i = 0; i < g.node_count(); ++i) table.set(i, "a", format_number(a[i]));
    emit(args.attrs_out, [&](std::ostream& out) { write_metadata(out, g, table); });
  }
  std::cerr << "accepted after " << attempt << " rejected draws\n";
  return kExitOk;
}

struct CampusArgs {
  std::size_t count = 20;
  std::uint64_t seed = 0;
  std::string out = "campus";
};

int run_generate_campus(const CampusArgs& args) {
  const fs::path dir(args.out);
  fs::create_directories(dir);
  const std::vector<CampusSpec> specs = campus_corpus(args.count, args.seed);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const CampusNetwork net = generate_campus(specs[k]);
    const std::string stem = "campus_" + std::to_string(k);
    std::ofstream edges = open_output(dir / (stem + ".edges.tsv"));
    write_edge_list(edges, net.graph);
    std::ofstream meta = open_output(dir / (stem + ".meta.tsv"));
    write_metadata(meta, net.graph, net.metadata);
  }
  return kExitOk;
}

struct SimulateArgs {
  std::size_t n = 300;
  double p = 0.02;
  std::size_t runs = 200;
  std::string conditions = "-5:5";
  std::uint64_t seed = 0;
  int max_weight = 10;
  int scatter_condition = 0;
  unsigned threads = 0;
  bool full_scale = false;
  std::string out = "sweep";
};

int run_simulate(const SimulateArgs& args, const CLI::App& cmd) {
  SweepSpec spec = args.full_scale ? full_scale_sweep() : SweepSpec{};
  if (!args.full_scale || cmd.count("--n") > 0) spec.graph.n = args.n;
  if (!args.full_scale || cmd.count("--p") > 0) spec.graph.p = args.p;
  if (!args.full_scale || cmd.count("--runs") > 0) spec.runs = args.runs;
  if (!args.full_scale || cmd.count("--conditions") > 0) spec.conditions = parse_conditions(args.conditions);
  spec.graph.max_weight = args.max_weight;
  spec.master_seed = args.seed;
  spec.scatter_condition = args.scatter_condition;
  spec.threads = thread_count(args.threads);
  spec.abort_on_violation = false;

  const SimulationSummary summary = run_sweep(spec);
  const fs::path dir(args.out);
  fs::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "conditions.csv");
    write_conditions_csv(out, summary);
  }
  {
    std::ofstream out = open_output(dir / "scatter.csv");
    write_scatter_csv(out, summary.scatter);
  }
  {
    std::ofstream out = open_output(dir / "summary.json");
    write_json(out, summary_to_json(summary));
  }
  std::cout << "runs " << spec.runs << ", conditions " << spec.conditions.size() << ", discarded graphs "
            << summary.discarded << ", sign-rule violations " << summary.total_sign_violations() << '\n';
  if (summary.total_sign_violations() > 0) {
    std::cerr << "error: sign rules violated\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

struct PipelineArgs {
  std::vector<std::string> edges;
  std::vector<std::string> meta;
  std::string gender_col = "gender";
  std::string year_col = "year";
  std::string missing;
  bool lenient = false;
  bool config_model = false;
  std::uint64_t seed = 0;
  std::string out = "pipeline";
};

int run_pipeline_cmd(const PipelineArgs& args) {
  if (args.edges.size() != args.meta.size()) {
    throw Error(ErrorCode::InvalidArgument, "give one --meta file per --edges file");
  }
  LoadOptions load;
  load.lenient = args.lenient;
  load.missing_token = args.missing;
  std::vector<std::string> ids;
  std::vector<PipelineResult> results;
  for (std::size_t k = 0; k < args.edges.size(); ++k) {
    const LoadedGraph loaded = load_graph(args.edges[k], fs::path(args.meta[k]), load);
    PipelineOptions options;
    options.gender_column = args.gender_col;
    options.year_column = args.year_col;
    options.config_model = args.config_model;
    options.seed = derive_seed(args.seed, k, Stream::Rewire);
    results.push_back(run_pipeline(loaded.graph, loaded.metadata, options));
    std::string id = fs::path(args.edges[k]).filename().string();
    if (const auto dot = id.find('.'); dot != std::string::npos && dot > 0) id.resize(dot);
    ids.push_back(id);
  }

  const fs::path dir(args.out);
  fs::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "networks.csv");
    write_networks_csv(out, ids, results);
  }
  std::vector<AnalyzedGraph> originals;
  std::vector<AnalyzedGraph> rewired;
  bool consistent = true;
  for (const auto& r : results) {
    originals.push_back(r.original.analysis);
    consistent = consistent && r.original.analysis.consistency.ok();
    if (r.rewired) {
      rewired.push_back(r.rewired->analysis);
      consistent = consistent && r.rewired->analysis.consistency.ok();
    }
  }
  {
    std::ofstream out = open_output(dir / "scatter.csv");
    write_scatter_csv(out, scatter_table(originals, ids));
  }
  if (args.config_model) {
    const ConfigComparison comparison = compare_original_vs_config(originals, rewired);
    std::ofstream cmp = open_output(dir / "comparison.csv");
    write_comparison_csv(cmp, comparison);
    std::ofstream slopes = open_output(dir / "slopes.csv");
    write_slopes_csv(slopes, comparison);
  }
  std::cout << "networks " << results.size() << '\n';
  if (!consistent) {
    std::cerr << "error: sign rules violated\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t graphs = 200;
  std::size_t max_n = 30;
  std::uint64_t seed = 1;
  bool inject_fault = false;
  std::string json;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.graphs = args.graphs;
  options.max_n = args.max_n;
  options.seed = args.seed;
  options.fault = args.inject_fault ? Fault::FlipSign : Fault::None;
  const std::vector<PropertyResult> results = run_property_suite(options);
  bool ok = true;
  for (const PropertyResult& r : results) ok = ok && r.ok();
  // The JSON report replaces the summary lines when it goes to stdout.
  for (const PropertyResult& r : results) {
    if (args.json == "-") break;
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << r.violations
              << " violations)";
    if (!r.ok()) std::cout << " first: " << r.first_failure;
    std::cout << '\n';
  }
  if (!args.json.empty()) emit(args.json, [&](std::ostream& out) { write_json(out, properties_to_json(results)); });
  return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friendship paradox gaps on weighted undirected graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report all eight gaps, sign-rule correlations and consistency");
  analyze_cmd->add_option("edges", analyze_args.edges, "Edge list file")->required();
  analyze_cmd->add_option("--attrs", analyze_args.attrs, "Node attribute table (header row, label column first)");
  analyze_cmd->add_option("--attr-col", analyze_args.attr_col, "Attribute column (default: the only value column)");
  analyze_cmd->add_option("--missing", analyze_args.missing, "Token marking a missing metadata value");
  analyze_cmd->add_flag("--lenient", analyze_args.lenient, "Drop self-loops and repeated pairs instead of failing");
  analyze_cmd->add_flag("--strict-connected", analyze_args.strict_connected, "Fail on a disconnected graph");
  analyze_cmd->add_option("--json", analyze_args.json, "Write the JSON report here ('-' for stdout)");
  analyze_cmd->add_option("--csv", analyze_args.csv, "Write the CSV report here ('-' for stdout)");

  auto* generate_cmd = app.add_subcommand("generate", "Write synthetic graphs");
  generate_cmd->require_subcommand(1);
  GnpArgs gnp_args;
  auto* gnp_cmd = generate_cmd->add_subcommand("gnp", "One accepted G(n,p) graph with integer weights");
  gnp_cmd->add_option("--n", gnp_args.n, "Nodes")->check(CLI::Range(3, 1'000'000));
  gnp_cmd->add_option("--p", gnp_args.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gnp_cmd->add_option("--max-weight", gnp_args.max_weight, "Weights uniform on 1..max")->check(CLI::PositiveNumber);
  gnp_cmd->add_option("--seed", gnp_args.seed, "Seed");
  gnp_cmd->add_option("--condition", gnp_args.condition, "Attribute condition j in [-100, 100]")
      ->check(CLI::Range(-100, 100));
  gnp_cmd->add_option("--out", gnp_args.out, "Edge list output ('-' for stdout)")->required();
  gnp_cmd->add_option("--attrs-out", gnp_args.attrs_out, "Attribute table output (needs --condition)");
  CampusArgs campus_args;
  auto* campus_cmd = generate_cmd->add_subcommand("campus", "Corpus of two-block networks with gender/year metadata");
  campus_cmd->add_option("--count", campus_args.count, "Networks")->check(CLI::PositiveNumber);
  campus_cmd->add_option("--seed", campus_args.seed, "Seed");
  campus_cmd->add_option("--out", campus_args.out, "Output directory");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Condition sweep over random graphs");
  sim_cmd->add_option("--n", sim_args.n, "Nodes per graph")->check(CLI::Range(3, 1'000'000));
  sim_cmd->add_option("--p", sim_args.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--runs", sim_args.runs, "Graphs")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--conditions", sim_args.conditions, "Range 'a:b', list 'a,b,c' or one value");
  sim_cmd->add_option("--seed", sim_args.seed, "Master seed");
  sim_cmd->add_option("--max-weight", sim_args.max_weight, "Weights uniform on 1..max")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--scatter-condition", sim_args.scatter_condition, "Condition written to scatter.csv");
  sim_cmd->add_option("--threads", sim_args.threads, "Worker threads (default: PARADOX_THREADS or all cores)");
  sim_cmd->add_flag("--full-scale", sim_args.full_scale, "n=1000, p=1/50, 1000 runs, conditions -100:100");
  sim_cmd->add_option("--out", sim_args.out, "Output directory");

  PipelineArgs pipe_args;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Attribute and weight construction from node metadata");
  pipe_cmd->add_option("--edges", pipe_args.edges, "Edge list (repeatable)")->required();
  pipe_cmd->add_option("--meta", pipe_args.meta, "Metadata table, one per --edges")->required();
  pipe_cmd->add_option("--gender-col", pipe_args.gender_col, "Column for the same-value share attribute");
  pipe_cmd->add_option("--year-col", pipe_args.year_col, "Column for the weight-2 rule");
  pipe_cmd->add_option("--missing", pipe_args.missing, "Token marking a missing metadata value");
  pipe_cmd->add_flag("--lenient", pipe_args.lenient, "Drop self-loops and repeated pairs instead of failing");
  pipe_cmd->add_flag("--config-model", pipe_args.config_model, "Also analyze a configuration-model rewiring");
  pipe_cmd->add_option("--seed", pipe_args.seed, "Seed");
  pipe_cmd->add_option("--out", pipe_args.out, "Output directory");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Property suite over random small graphs");
  verify_cmd->add_option("--graphs", verify_args.graphs, "Graphs")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest graph")->check(CLI::Range(3, 100));
  verify_cmd->add_option("--seed", verify_args.seed, "Seed");
  verify_cmd->add_option("--json", verify_args.json, "Write the JSON report here ('-' for stdout)");
  verify_cmd->add_flag("--inject-fault", verify_args.inject_fault)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*gnp_cmd) return run_generate_gnp(gnp_args);
    if (*campus_cmd) return run_generate_campus(campus_args);
    if (*sim_cmd) return run_simulate(sim_args, *sim_cmd);
    if (*pipe_cmd) return run_pipeline_cmd(pipe_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInconsistency ? kExitInconsistent : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
