#include "noderank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "noderank/centrality.hpp"
#include "noderank/error.hpp"
#include "noderank/format.hpp"

namespace noderank {

using Json = nlohmann::ordered_json;

namespace {

Json provenance_json(const Provenance& p) {
  Json flags = Json::array();
  for (const auto& [name, value] : p.flags) flags.push_back(Json::array({name, value}));
  return Json{{"tool", p.tool},       {"version", p.version}, {"command", p.command},
              {"input", p.input},     {"input_fnv1a", p.input_fnv1a},
              {"flags", std::move(flags)}};
}

Json optional_real(const std::vector<double>& v, std::size_t i) {
  return v.empty() ? Json(nullptr) : Json(v[i]);
}

std::string optional_csv(const std::vector<double>& v, std::size_t i) {
  return v.empty() ? std::string() : format_real(v[i]);
}

void dump(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  AnalysisReport r;
  const std::size_t n = g.node_count();
  r.summary = summarize(g, options.paths);
  if (r.summary.path_estimated) {
    r.warnings.push_back("average path length estimated from " +
                         std::to_string(options.paths.sample_sources) +
                         " sampled sources; diameter is a lower bound");
  }
  r.power_law_exponent = degree_histogram(g).exponent;
  if (!r.power_law_exponent) r.warnings.push_back("power-law exponent unavailable: too few nodes with degree >= 2");

  const auto clustering = clustering_coefficients(g);
  const auto dc = degree_centrality(g);
  std::vector<double> bc(n, 0.0);
  if (n >= 3) {
    bc = betweenness_centrality(g).values;
  } else {
    r.warnings.push_back("betweenness undefined for fewer than 3 nodes; reported as 0");
  }
  const auto cc = closeness_centrality(g);
  const auto ec = eigenvector_centrality_with_retry(g, options.eigenvector);
  if (ec.iterations > options.eigenvector.max_iterations) {
    r.warnings.push_back("eigenvector centrality converged only with damping");
  }

  const InfluenceScores inf = compute_influence(g, options.influence);
  r.alpha = options.influence.alpha;
  r.effective_alpha = inf.fused.alpha;
  r.dematel_skipped = inf.dematel_skipped;
  if (inf.dematel_skipped) {
    r.warnings.push_back("DEMATEL skipped: " + std::to_string(n) + " nodes exceed the dense cap of " +
                         std::to_string(kDematelMaxNodes) + "; fused ranking uses alpha = 1 (GSM only)");
  }

  r.nodes.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    NodeRow& row = r.nodes[v];
    row.node_id = g.label(v);
    row.degree = g.degree(v);
    row.k_shell = inf.shells[v];
    row.clustering = clustering[v];
    row.dc = dc.values[v];
    row.bc = bc[v];
    row.cc = cc.values[v];
    row.ec = ec.values[v];
    row.self_influence = inf.gsm.self_influence[v];
    row.global_influence = inf.gsm.global_influence[v];
    row.gsm = inf.gsm.gsm[v];
    if (!inf.dematel_skipped) row.prominence = inf.prominence[v];
    row.fused = inf.fused.fused[v];
    row.rank = inf.rank[v];
  }
  return r;
}

void write_report_json(std::ostream& out, const AnalysisReport& report,
                       const std::vector<NodeRecord>* gnid) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["provenance"] = provenance_json(report.provenance);
  const auto& s = report.summary;
  doc["summary"] = Json{{"nodes", s.nodes},
                        {"edges", s.edges},
                        {"density", s.density},
                        {"average_degree", s.average_degree},
                        {"diameter", s.diameter},
                        {"average_path_length", s.average_path_length},
                        {"path_estimated", s.path_estimated},
                        {"lcc_size", s.lcc_size},
                        {"average_clustering", s.average_clustering},
                        {"max_k_shell", s.max_k_shell},
                        {"power_law_exponent", report.power_law_exponent
                                                   ? Json(*report.power_law_exponent)
                                                   : Json(nullptr)},
                        {"alpha", report.alpha},
                        {"effective_alpha", report.effective_alpha},
                        {"dematel_skipped", report.dematel_skipped}};
  Json nodes = Json::array();
  for (const auto& row : report.nodes) {
    nodes.push_back(Json{{"node_id", row.node_id},
                         {"degree", row.degree},
                         {"k_shell", row.k_shell},
                         {"clustering", row.clustering},
                         {"dc", row.dc},
                         {"bc", row.bc},
                         {"cc", row.cc},
                         {"ec", row.ec},
                         {"self_influence", row.self_influence},
                         {"global_influence", row.global_influence},
                         {"gsm", row.gsm},
                         {"prominence", row.prominence ? Json(*row.prominence) : Json(nullptr)},
                         {"fused", row.fused},
                         {"rank", row.rank}});
  }
  doc["nodes"] = std::move(nodes);
  if (gnid) {
    Json table = Json::array();
    for (const auto& rec : *gnid) {
      table.push_back(Json{{"node_id", rec.node_id},
                           {"network_type", rec.network_type},
                           {"node_type", rec.node_type},
                           {"connections", rec.connections},
                           {"k_shell_index", rec.k_shell_index},
                           {"self_influence", rec.self_influence},
                           {"global_influence", rec.global_influence}});
    }
    doc["gnid"] = std::move(table);
  }
  doc["warnings"] = report.warnings;
  dump(out, doc);
}

void write_summary_csv(std::ostream& out, const AnalysisReport& report) {
  const auto& s = report.summary;
  out << "key,value\n";
  out << "schema_version," << kSchemaVersion << '\n';
  out << "nodes," << s.nodes << '\n';
  out << "edges," << s.edges << '\n';
  out << "density," << format_real(s.density) << '\n';
  out << "average_degree," << format_real(s.average_degree) << '\n';
  out << "diameter," << s.diameter << '\n';
  out << "average_path_length," << format_real(s.average_path_length) << '\n';
  out << "path_estimated," << (s.path_estimated ? "true" : "false") << '\n';
  out << "lcc_size," << s.lcc_size << '\n';
  out << "average_clustering," << format_real(s.average_clustering) << '\n';
  out << "max_k_shell," << s.max_k_shell << '\n';
  out << "power_law_exponent,"
      << (report.power_law_exponent ? format_real(*report.power_law_exponent) : std::string()) << '\n';
  out << "alpha," << format_real(report.alpha) << '\n';
  out << "effective_alpha," << format_real(report.effective_alpha) << '\n';
  out << "dematel_skipped," << (report.dematel_skipped ? "true" : "false") << '\n';
  const auto& p = report.provenance;
  out << "tool," << csv_field(p.tool) << '\n';
  out << "version," << csv_field(p.version) << '\n';
  out << "command," << csv_field(p.command) << '\n';
  out << "input," << csv_field(p.input) << '\n';
  out << "input_fnv1a," << csv_field(p.input_fnv1a) << '\n';
  for (const auto& [name, value] : p.flags) out << "flag:" << csv_field(name) << ',' << csv_field(value) << '\n';
  for (const auto& w : report.warnings) out << "warning," << csv_field(w) << '\n';
}

void write_nodes_csv(std::ostream& out, const AnalysisReport& report) {
  out << "node_id,degree,k_shell,clustering,dc,bc,cc,ec,self_influence,global_influence,gsm,"
         "prominence,fused,rank\n";
  for (const auto& row : report.nodes) {
    out << csv_field(row.node_id) << ',' << row.degree << ',' << row.k_shell << ','
        << format_real(row.clustering) << ',' << format_real(row.dc) << ',' << format_real(row.bc)
        << ',' << format_real(row.cc) << ',' << format_real(row.ec) << ','
        << format_real(row.self_influence) << ',' << format_real(row.global_influence) << ','
        << format_real(row.gsm) << ',' << (row.prominence ? format_real(*row.prominence) : std::string())
        << ',' << format_real(row.fused) << ',' << row.rank << '\n';
  }
}

void write_scores_csv(std::ostream& out, const Graph& g, const InfluenceScores& s) {
  out << "node_id,ks,SI,GI,gsm,D,R,prominence,relation,fused,rank\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << csv_field(g.label(v)) << ',' << s.shells[v] << ',' << format_real(s.gsm.self_influence[v])
        << ',' << format_real(s.gsm.global_influence[v]) << ',' << format_real(s.gsm.gsm[v]) << ','
        << optional_csv(s.dispatch, v) << ',' << optional_csv(s.receive, v) << ','
        << optional_csv(s.prominence, v) << ',' << optional_csv(s.relation, v) << ','
        << format_real(s.fused.fused[v]) << ',' << s.rank[v] << '\n';
  }
}

void write_scores_json(std::ostream& out, const Graph& g, const InfluenceScores& s) {
  Json rows = Json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    rows.push_back(Json{{"node_id", g.label(v)},
                        {"ks", s.shells[v]},
                        {"SI", s.gsm.self_influence[v]},
                        {"GI", s.gsm.global_influence[v]},
                        {"gsm", s.gsm.gsm[v]},
                        {"D", optional_real(s.dispatch, v)},
                        {"R", optional_real(s.receive, v)},
                        {"prominence", optional_real(s.prominence, v)},
                        {"relation", optional_real(s.relation, v)},
                        {"fused", s.fused.fused[v]},
                        {"rank", s.rank[v]}});
  }
  Json doc{{"schema_version", kSchemaVersion},
           {"alpha", s.requested_alpha},
           {"effective_alpha", s.fused.alpha},
           {"dematel_skipped", s.dematel_skipped},
           {"scores", std::move(rows)}};
  dump(out, doc);
}

void write_curve_csv(std::ostream& out, const RobustnessCurve& curve) {
  out << "removed_fraction,mean_lcc_fraction,stddev\n";
  for (const auto& p : curve.points) {
    out << format_real(p.removed_fraction) << ',' << format_real(p.mean_lcc_fraction) << ','
        << format_real(p.stddev) << '\n';
  }
}

void write_comparison_json(std::ostream& out, const StrategyComparison& comparison,
                           const Provenance& provenance) {
  Json curves = Json::array();
  for (const auto& c : comparison.curves) {
    Json points = Json::array();
    for (const auto& p : c.points) {
      points.push_back(Json{{"removed_fraction", p.removed_fraction},
                            {"mean_lcc_fraction", p.mean_lcc_fraction},
                            {"stddev", p.stddev}});
    }
    curves.push_back(Json{{"strategy", c.label},
                          {"trials", c.trials},
                          {"baseline_lcc", c.baseline_lcc},
                          {"auc", c.auc},
                          {"points", std::move(points)}});
  }
  Json doc{{"schema_version", kSchemaVersion},
           {"provenance", provenance_json(provenance)},
           {"curves", std::move(curves)}};
  dump(out, doc);
}

void write_spread_json(std::ostream& out, const Graph& g, const SpreadResult& result,
                       const std::optional<RankingValidation>& validation, const Provenance& provenance) {
  auto labels = [&g](const std::vector<NodeId>& nodes) {
    Json a = Json::array();
    for (NodeId v : nodes) a.push_back(g.label(v));
    return a;
  };
  Json doc{{"schema_version", kSchemaVersion},
           {"provenance", provenance_json(provenance)},
           {"seeds", labels(result.seeds)},
           {"params", Json{{"beta", result.beta},
                           {"beta_auto", !result.params.beta.has_value()},
                           {"beta_multiplier", result.params.beta_multiplier},
                           {"mu", result.params.mu},
                           {"max_steps", result.params.max_steps},
                           {"trials", result.params.trials},
                           {"seed", result.params.seed}}},
           {"trials", result.trials},
           {"mean_outbreak", result.mean_outbreak},
           {"stddev", result.stddev}};
  if (validation) {
    doc["validation"] = Json{{"k", validation->k},
                             {"top_nodes", labels(validation->top_nodes)},
                             {"random_nodes", labels(validation->random_nodes)},
                             {"top_mean", validation->top_mean},
                             {"random_mean", validation->random_mean},
                             {"ratio", validation->ratio}};
  }
  dump(out, doc);
}

void write_validation_csv(std::ostream& out, const std::string& ranking_name,
                          const RankingValidation& v, bool header) {
  if (header) out << "ranking,k,beta,top_mean,random_mean,ratio\n";
  out << csv_field(ranking_name) << ',' << v.k << ',' << format_real(v.beta) << ','
      << format_real(v.top_mean) << ',' << format_real(v.random_mean) << ',' << format_real(v.ratio)
      << '\n';
}

}  // namespace noderank
