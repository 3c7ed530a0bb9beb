#include "commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "noderank/error.hpp"
#include "noderank/format.hpp"
#include "noderank/generate.hpp"
#include "noderank/gnid.hpp"
#include "noderank/histogram.hpp"
#include "noderank/influence.hpp"
#include "noderank/metrics.hpp"
#include "noderank/propagation.hpp"
#include "noderank/report.hpp"
#include "noderank/robustness.hpp"

namespace noderank::cli {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kMethods = {"fused", "gsm", "dematel", "dc", "bc", "cc", "ec", "kshell"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
  return out;
}

struct LoadedGraph {
  Graph graph;
  Provenance provenance;
  std::vector<std::string> warnings;
};

LoadedGraph load_input(const std::string& path, const std::string& command, std::ostream& err) {
  const std::string bytes = read_file(path);
  std::istringstream in(bytes);
  EdgeListLoad load = load_edge_list(in);
  LoadedGraph g;
  g.graph = std::move(load.graph);
  g.provenance.command = command;
  g.provenance.input = path;
  g.provenance.input_fnv1a = fnv1a_hex(bytes);
  if (load.dropped_self_loops + load.dropped_duplicates > 0) {
    g.warnings.push_back("input: dropped " + std::to_string(load.dropped_self_loops) + " self-loops and " +
                         std::to_string(load.dropped_duplicates) + " duplicate edges");
  }
  for (const auto& w : load.warnings) err << "warning: " << w << '\n';
  return g;
}

Measure measure_or_throw(const std::string& name) {
  auto m = parse_measure(name);
  if (!m) fail(ErrorCode::Usage, "unknown method '" + name + "'");
  return *m;
}

// Records every option of `sub` (except help) in definition order.
std::vector<std::pair<std::string, std::string>> flag_values(const CLI::App& sub) {
  std::vector<std::pair<std::string, std::string>> flags;
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name == "--help" || name.empty()) continue;
    if (opt->count() == 0 && opt->get_default_str().empty()) continue;
    std::string value = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
    if (opt->get_type_size() == 0) value = opt->count() > 0 ? "true" : "false";
    flags.emplace_back(name, value);
  }
  return flags;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string model = "ba";
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GeneratorSpec spec;
  spec.model = (a.model == "ba" || a.model == "scale_free") ? GraphModel::ScaleFree : GraphModel::UniformRandom;
  spec.nodes = a.nodes;
  spec.target_edges = a.edges;
  spec.seed = a.seed;
  const Graph g = generate(spec);
  const std::vector<std::string> header = {
      "noderank " NODERANK_VERSION " generate --model " + a.model + " --nodes " + std::to_string(a.nodes) +
          " --edges " + std::to_string(a.edges) + " --seed " + std::to_string(a.seed),
      "model " + std::string(to_string(spec.model)) + ", nodes " + std::to_string(g.node_count()) +
          ", edges " + std::to_string(g.edge_count())};
  if (a.out.empty()) {
    write_edge_list(out, g, header);
  } else {
    auto file = open_output(a.out);
    write_edge_list(file, g, header);
  }
  return 0;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string gnid;
  std::string format = "json";
  double alpha = kDefaultAlpha;
  double epsilon = kDematelDefaultEpsilon;
  std::size_t path_sources = 1000;
  std::size_t exact_path_limit = 20000;
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (a.input.empty() && a.gnid.empty()) fail(ErrorCode::Usage, "analyze needs --input and/or --gnid");
  if (a.format == "csv" && a.out.empty()) fail(ErrorCode::Usage, "--format csv requires --out DIR");

  std::optional<std::vector<NodeRecord>> gnid;
  if (!a.gnid.empty()) gnid = load_gnid_table_file(a.gnid);

  if (a.input.empty()) {
    // Metadata-only run: echo the parsed table.
    if (a.out.empty()) {
      write_gnid_table(out, *gnid);
    } else {
      auto file = open_output(fs::path(a.out) / "gnid.csv");
      write_gnid_table(file, *gnid);
    }
    return 0;
  }

  LoadedGraph loaded = load_input(a.input, "analyze", err);
  AnalysisOptions options;
  options.influence.alpha = a.alpha;
  options.influence.epsilon = a.epsilon;
  options.paths.sample_sources = a.path_sources;
  options.paths.exact_limit = a.exact_path_limit;
  AnalysisReport report = analyze(loaded.graph, options);
  report.provenance = loaded.provenance;
  report.provenance.flags = flag_values(sub);
  report.warnings.insert(report.warnings.begin(), loaded.warnings.begin(), loaded.warnings.end());
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  if (a.out.empty()) {
    write_report_json(out, report, gnid ? &*gnid : nullptr);
    return 0;
  }
  const fs::path dir(a.out);
  if (a.format == "json") {
    auto file = open_output(dir / "report.json");
    write_report_json(file, report, gnid ? &*gnid : nullptr);
  } else {
    auto summary = open_output(dir / "summary.csv");
    write_summary_csv(summary, report);
    auto nodes = open_output(dir / "nodes.csv");
    write_nodes_csv(nodes, report);
  }
  if (gnid) {
    auto file = open_output(dir / "gnid.csv");
    write_gnid_table(file, *gnid);
  }
  return 0;
}

// --- rank -------------------------------------------------------------------

struct RankArgs {
  std::string input;
  std::string method = "fused";
  std::size_t top = 10;
  double alpha = kDefaultAlpha;
  double epsilon = kDematelDefaultEpsilon;
  std::string export_path;
};

int cmd_rank(const RankArgs& a, std::ostream& out, std::ostream& err) {
  const Measure measure = measure_or_throw(a.method);
  LoadedGraph loaded = load_input(a.input, "rank", err);
  const Graph& g = loaded.graph;
  RankOptions options;
  options.influence.alpha = a.alpha;
  options.influence.epsilon = a.epsilon;
  if (measure == Measure::Dematel && g.node_count() > kDematelMaxNodes) {
    err << "hint: DEMATEL is limited to " << kDematelMaxNodes
        << " nodes; use --method gsm or --method fused (falls back to alpha = 1)\n";
  }
  const MeasureScores ranked = rank_by(measure, g, options);
  if (measure == Measure::Fused && g.node_count() > kDematelMaxNodes) {
    err << "warning: DEMATEL skipped above " << kDematelMaxNodes << " nodes; fused ranking uses alpha = 1\n";
  }
  const std::size_t k = std::min(a.top, ranked.order.size());
  if (k > 0) out << "rank,node_id,score\n";
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId v = ranked.order[i];
    out << i + 1 << ',' << csv_field(g.label(v)) << ',' << format_real(ranked.scores[v]) << '\n';
  }
  if (!a.export_path.empty()) {
    const InfluenceScores scores = compute_influence(g, options.influence);
    auto file = open_output(a.export_path);
    if (fs::path(a.export_path).extension() == ".json") {
      write_scores_json(file, g, scores);
    } else {
      write_scores_csv(file, g, scores);
    }
  }
  return 0;
}

// --- robustness -------------------------------------------------------------

struct RobustnessArgs {
  std::string input;
  std::string strategy = "both";
  std::string measure = "dc";
  bool adaptive = false;
  double step = 0.01;
  double max = 0.30;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::string out = ".";
};

int cmd_robustness(const RobustnessArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  LoadedGraph loaded = load_input(a.input, "robustness", err);
  RemovalPlan base;
  base.step_fraction = a.step;
  base.max_fraction = a.max;
  base.trials = a.trials;
  base.seed = a.seed;
  base.adaptive = a.adaptive;

  RemovalPlan random = base;
  random.strategy = RemovalStrategy::Random;
  RemovalPlan targeted = base;
  const Measure measure = measure_or_throw(a.measure);
  if (measure == Measure::Degree) {
    targeted.strategy = RemovalStrategy::TargetedDegree;
  } else {
    targeted.strategy = RemovalStrategy::TargetedMeasure;
    targeted.measure = measure;
  }

  StrategyComparison comparison;
  if (a.strategy == "both") {
    comparison = compare_strategies(loaded.graph, {random, targeted});
  } else {
    comparison.curves.push_back(run_removal(loaded.graph, a.strategy == "random" ? random : targeted));
  }

  Provenance provenance = loaded.provenance;
  provenance.flags = flag_values(sub);
  const fs::path dir(a.out);
  for (const auto& curve : comparison.curves) {
    auto file = open_output(dir / (curve.label + ".csv"));
    write_curve_csv(file, curve);
  }
  auto json = open_output(dir / "robustness.json");
  write_comparison_json(json, comparison, provenance);

  out << "strategy,auc,final_lcc_fraction\n";
  for (const auto& curve : comparison.curves) {
    out << curve.label << ',' << format_real(curve.auc) << ','
        << format_real(curve.points.back().mean_lcc_fraction) << '\n';
  }
  return 0;
}

// --- spread -----------------------------------------------------------------

struct SpreadArgs {
  std::string input;
  std::string seeds;
  std::string beta = "auto";
  double beta_multiplier = 1.5;
  double mu = 1.0;
  std::size_t trials = 1000;
  std::size_t max_steps = 10000;
  std::uint64_t seed = 0;
  double alpha = kDefaultAlpha;
  std::string out;
  std::string validation_csv;
};

struct SeedSpec {
  std::optional<std::size_t> top;
  Measure method = Measure::Fused;
  std::vector<std::string> labels;
};

SeedSpec parse_seed_spec(const std::string& text) {
  SeedSpec spec;
  auto bad = [&]() -> SeedSpec {
    fail(ErrorCode::Usage, "bad --seeds '" + text + "': expected top:K:METHOD or list:a,b,c");
  };
  if (text.rfind("top:", 0) == 0) {
    const std::string rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return bad();
    const std::string count = rest.substr(0, colon);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
    if (ec != std::errc{} || ptr != count.data() + count.size() || count.empty() || k == 0) return bad();
    auto m = parse_measure(rest.substr(colon + 1));
    if (!m) return bad();
    spec.top = k;
    spec.method = *m;
    return spec;
  }
  if (text.rfind("list:", 0) == 0) {
    std::string rest = text.substr(5);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) return bad();
      spec.labels.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (spec.labels.empty()) fail(ErrorCode::EmptySeeds, "seed list is empty");
    return spec;
  }
  return bad();
}

int cmd_spread(const SpreadArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const SeedSpec spec = parse_seed_spec(a.seeds);
  SirParams params;
  if (a.beta != "auto") {
    double beta = 0.0;
    auto [ptr, ec] = std::from_chars(a.beta.data(), a.beta.data() + a.beta.size(), beta);
    if (ec != std::errc{} || ptr != a.beta.data() + a.beta.size()) {
      fail(ErrorCode::Usage, "--beta must be 'auto' or a number");
    }
    params.beta = beta;
  }
  params.beta_multiplier = a.beta_multiplier;
  params.mu = a.mu;
  params.trials = a.trials;
  params.max_steps = a.max_steps;
  params.seed = a.seed;

  LoadedGraph loaded = load_input(a.input, "spread", err);
  const Graph& g = loaded.graph;
  std::vector<NodeId> seeds;
  std::optional<RankingValidation> validation;
  if (spec.top) {
    if (*spec.top > g.node_count()) fail(ErrorCode::Usage, "top K exceeds node count");
    RankOptions options;
    options.influence.alpha = a.alpha;
    const MeasureScores ranked = rank_by(spec.method, g, options);
    seeds.assign(ranked.order.begin(), ranked.order.begin() + static_cast<std::ptrdiff_t>(*spec.top));
    validation = validate_ranking(g, ranked.order, *spec.top, params);
  } else {
    std::unordered_map<std::string, NodeId> index;
    for (NodeId v = 0; v < g.node_count(); ++v) index.emplace(g.label(v), v);
    for (const auto& label : spec.labels) {
      auto it = index.find(label);
      if (it == index.end()) fail(ErrorCode::IndexOutOfRange, "seed '" + label + "' is not a node");
      seeds.push_back(it->second);
    }
  }

  const SpreadResult result = sir_simulate(g, seeds, params);
  Provenance provenance = loaded.provenance;
  provenance.flags = flag_values(sub);
  if (a.out.empty()) {
    write_spread_json(out, g, result, validation, provenance);
  } else {
    auto file = open_output(a.out);
    write_spread_json(file, g, result, validation, provenance);
  }
  if (validation && !a.validation_csv.empty()) {
    auto file = open_output(a.validation_csv);
    write_validation_csv(file, std::string(to_string(spec.method)), *validation);
  }
  return 0;
}

// --- hist -------------------------------------------------------------------

struct HistArgs {
  std::string input;
  std::string metric = "degree";
  std::size_t bins = 20;
  std::string out;
  bool log = false;
  double alpha = kDefaultAlpha;
};

int cmd_hist(const HistArgs& a, std::ostream& out, std::ostream& err) {
  if (a.metric != "degree" && a.metric != "gsm" && a.metric != "fused") {
    fail(ErrorCode::UnknownMetric, "'" + a.metric + "' (expected degree, gsm or fused)");
  }
  LoadedGraph loaded = load_input(a.input, "hist", err);
  const Graph& g = loaded.graph;
  std::vector<double> values;
  if (a.metric == "degree") {
    for (NodeId v = 0; v < g.node_count(); ++v) values.push_back(static_cast<double>(g.degree(v)));
  } else if (a.metric == "gsm") {
    values = gsm_scores(g, k_shell(g)).gsm;
  } else {
    InfluenceOptions options;
    options.alpha = a.alpha;
    values = compute_influence(g, options).fused.fused;
  }
  const Histogram h = make_histogram(values, a.bins);
  fs::path svg_path(a.out);
  fs::path csv_path = svg_path;
  csv_path.replace_extension(".csv");
  {
    auto svg = open_output(svg_path);
    write_histogram_svg(svg, h, a.metric + " distribution (" + fs::path(a.input).filename().string() + ")",
                        a.log);
  }
  auto csv = open_output(csv_path);
  write_histogram_csv(csv, h);
  out << "wrote " << svg_path.string() << " and " << csv_path.string() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"noderank: node influence analysis for complex networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", NODERANK_VERSION);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic network as an edge list");
  generate_cmd->add_option("--model", gen.model, "ba (scale-free) or er (uniform random)")
      ->check(CLI::IsMember({"ba", "er", "scale_free", "uniform_random"}))
      ->capture_default_str();
  generate_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  generate_cmd->add_option("--edges", gen.edges, "Target edge count")->required();
  generate_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--out", gen.out, "Output path (stdout if omitted)");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structural metrics, centralities and influence scores");
  analyze_cmd->add_option("--input", an.input, "Edge list");
  analyze_cmd->add_option("--gnid", an.gnid, "Node metadata table to parse and echo");
  analyze_cmd->add_option("--format", an.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  analyze_cmd->add_option("--alpha", an.alpha, "GSM weight in the fused score")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  analyze_cmd->add_option("--epsilon", an.epsilon, "DEMATEL normalization inflation")->capture_default_str();
  analyze_cmd->add_option("--path-sources", an.path_sources, "BFS sources sampled above the exact limit")
      ->capture_default_str();
  analyze_cmd->add_option("--exact-path-limit", an.exact_path_limit, "Largest LCC measured exactly")
      ->capture_default_str();
  analyze_cmd->add_option("--out", an.out, "Output directory (JSON to stdout if omitted)");

  RankArgs rk;
  auto* rank_cmd = app.add_subcommand("rank", "Rank nodes by one measure");
  rank_cmd->add_option("--input", rk.input, "Edge list")->required();
  rank_cmd->add_option("--method", rk.method, "fused|gsm|dematel|dc|bc|cc|ec|kshell")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  rank_cmd->add_option("--top", rk.top, "Number of nodes to list")->capture_default_str();
  rank_cmd->add_option("--alpha", rk.alpha, "GSM weight in the fused score")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  rank_cmd->add_option("--epsilon", rk.epsilon, "DEMATEL normalization inflation")->capture_default_str();
  rank_cmd->add_option("--export", rk.export_path, "Write the full influence score table (.csv or .json)");

  RobustnessArgs rb;
  auto* robustness_cmd = app.add_subcommand("robustness", "LCC degradation under node removal");
  robustness_cmd->add_option("--input", rb.input, "Edge list")->required();
  robustness_cmd->add_option("--strategy", rb.strategy, "random, targeted or both")
      ->check(CLI::IsMember({"random", "targeted", "both"}))
      ->capture_default_str();
  robustness_cmd->add_option("--measure", rb.measure, "Ranking used for targeted removal")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  robustness_cmd->add_flag("--adaptive", rb.adaptive, "Re-rank survivors before each targeted step");
  robustness_cmd->add_option("--step", rb.step, "Removal step as a fraction of N")->capture_default_str();
  robustness_cmd->add_option("--max", rb.max, "Largest removed fraction")->capture_default_str();
  robustness_cmd->add_option("--trials", rb.trials, "Random trials")->capture_default_str();
  robustness_cmd->add_option("--seed", rb.seed, "RNG seed")->capture_default_str();
  robustness_cmd->add_option("--out", rb.out, "Output directory")->capture_default_str();

  SpreadArgs sp;
  auto* spread_cmd = app.add_subcommand("spread", "SIR spreading from a seed set");
  spread_cmd->add_option("--input", sp.input, "Edge list")->required();
  spread_cmd->add_option("--seeds", sp.seeds, "top:K:METHOD or list:a,b,c")->required();
  spread_cmd->add_option("--beta", sp.beta, "Infection probability or 'auto'")->capture_default_str();
  spread_cmd->add_option("--beta-multiplier", sp.beta_multiplier, "Multiple of the epidemic threshold for auto")
      ->capture_default_str();
  spread_cmd->add_option("--mu", sp.mu, "Recovery probability")->capture_default_str();
  spread_cmd->add_option("--trials", sp.trials, "Monte Carlo trials")->capture_default_str();
  spread_cmd->add_option("--max-steps", sp.max_steps, "Step cap per trial")->capture_default_str();
  spread_cmd->add_option("--seed", sp.seed, "RNG seed")->capture_default_str();
  spread_cmd->add_option("--alpha", sp.alpha, "GSM weight for top:K:fused")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  spread_cmd->add_option("--out", sp.out, "Output JSON (stdout if omitted)");
  spread_cmd->add_option("--validation-csv", sp.validation_csv, "CSV row comparing top-K with random seeds");

  HistArgs hs;
  auto* hist_cmd = app.add_subcommand("hist", "Histogram of degree or influence scores");
  hist_cmd->add_option("--input", hs.input, "Edge list")->required();
  hist_cmd->add_option("--metric", hs.metric, "degree, gsm or fused")->capture_default_str();
  hist_cmd->add_option("--bins", hs.bins, "Bin count")->check(CLI::PositiveNumber)->capture_default_str();
  hist_cmd->add_option("--out", hs.out, "SVG path; the CSV goes next to it")->required();
  hist_cmd->add_flag("--log", hs.log, "Logarithmic count axis");
  hist_cmd->add_option("--alpha", hs.alpha, "GSM weight for the fused metric")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*analyze_cmd) return cmd_analyze(an, *analyze_cmd, out, err);
    if (*rank_cmd) return cmd_rank(rk, out, err);
    if (*robustness_cmd) return cmd_robustness(rb, *robustness_cmd, out, err);
    if (*spread_cmd) return cmd_spread(sp, *spread_cmd, out, err);
    if (*hist_cmd) return cmd_hist(hs, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace noderank::cli
