#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noderank/gnid.hpp"
#include "noderank/graph.hpp"
#include "noderank/influence.hpp"
#include "noderank/metrics.hpp"
#include "noderank/propagation.hpp"
#include "noderank/robustness.hpp"

namespace noderank {

inline constexpr int kSchemaVersion = 1;

/// What produced a report: enough to regenerate it.
struct Provenance {
  std::string tool = "noderank";
  std::string version = NODERANK_VERSION;
  std::string command;
  /// Input path or generator description.
  std::string input;
  /// FNV-1a 64 of the input bytes, hex; empty when not file-based.
  std::string input_fnv1a;
  /// Flags in the order given.
  std::vector<std::pair<std::string, std::string>> flags;
};

std::string fnv1a_hex(const std::string& bytes);

struct NodeRow {
  std::string node_id;
  std::size_t degree = 0;
  std::uint32_t k_shell = 0;
  double clustering = 0.0;
  double dc = 0.0;
  double bc = 0.0;
  double cc = 0.0;
  double ec = 0.0;
  double self_influence = 0.0;
  double global_influence = 0.0;
  double gsm = 0.0;
  std::optional<double> prominence;
  double fused = 0.0;
  std::size_t rank = 0;
};

struct AnalysisReport {
  GraphSummary summary;
  std::optional<double> power_law_exponent;
  std::vector<NodeRow> nodes;
  double alpha = kDefaultAlpha;
  double effective_alpha = kDefaultAlpha;
  bool dematel_skipped = false;
  std::vector<std::string> warnings;
  Provenance provenance;
};

struct AnalysisOptions {
  InfluenceOptions influence;
  EigenvectorOptions eigenvector;
  PathOptions paths;
};

/// Runs metrics, centralities and influence scoring on `g`.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

/// JSON document: schema_version, provenance, summary, nodes, warnings.
void write_report_json(std::ostream& out, const AnalysisReport& report,
                       const std::vector<NodeRecord>* gnid = nullptr);
/// Two CSV tables: key,value summary rows and one row per node.
void write_summary_csv(std::ostream& out, const AnalysisReport& report);
void write_nodes_csv(std::ostream& out, const AnalysisReport& report);

/// Influence score export: node_id, ks, SI, GI, gsm, D, R, prominence,
/// relation, fused, rank. DEMATEL columns are blank (null in JSON) when
/// DEMATEL was skipped.
void write_scores_csv(std::ostream& out, const Graph& g, const InfluenceScores& scores);
void write_scores_json(std::ostream& out, const Graph& g, const InfluenceScores& scores);

/// removed_fraction, mean_lcc_fraction, stddev.
void write_curve_csv(std::ostream& out, const RobustnessCurve& curve);
void write_comparison_json(std::ostream& out, const StrategyComparison& comparison,
                           const Provenance& provenance);

void write_spread_json(std::ostream& out, const Graph& g, const SpreadResult& result,
                       const std::optional<RankingValidation>& validation, const Provenance& provenance);
/// Header line followed by one row for `validation`.
void write_validation_csv(std::ostream& out, const std::string& ranking_name,
                          const RankingValidation& validation, bool header = true);

}  // namespace noderank
