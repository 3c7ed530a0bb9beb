#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noderank/graph.hpp"
#include "noderank/ranking.hpp"

namespace noderank {

enum class RemovalStrategy { Random, TargetedDegree, TargetedMeasure };

struct RemovalPlan {
  RemovalStrategy strategy = RemovalStrategy::Random;
  /// Ranking used by TargetedMeasure.
  Measure measure = Measure::Degree;
  double step_fraction = 0.01;
  double max_fraction = 0.30;
  /// Forced to 1 for the deterministic (targeted) strategies.
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  /// Targeted strategies only: re-rank the surviving graph before each step
  /// instead of using the initial ranking.
  bool adaptive = false;
};

/// "random", "targeted_degree", "targeted_<measure>", with "_adaptive" appended
/// for adaptive plans.
std::string plan_label(const RemovalPlan& plan);

struct CurvePoint {
  double removed_fraction = 0.0;
  double mean_lcc_fraction = 0.0;
  double stddev = 0.0;
};

struct RobustnessCurve {
  std::string label;
  std::vector<CurvePoint> points;
  /// LCC size of the intact graph; every fraction is relative to it.
  std::size_t baseline_lcc = 0;
  std::size_t trials = 0;
  /// per_trial[t][k]: LCC fraction of trial t at point k.
  std::vector<std::vector<double>> per_trial;
  /// Mean LCC fraction over all points, including the intact one.
  double auc = 0.0;
};

/// Removes nodes in steps of step_fraction * N up to max_fraction * N,
/// recording the LCC after each step. Random trials use independent streams
/// keyed by (seed, trial index). Throws PlanInfeasible for invalid plans or
/// graphs with fewer than 10 nodes.
RobustnessCurve run_removal(const Graph& g, const RemovalPlan& plan);

struct StrategyComparison {
  std::vector<RobustnessCurve> curves;
};

/// Runs each plan on the same graph. Plans must share step and max fractions
/// so points align. Throws PlanInfeasible for fewer than 2 plans.
StrategyComparison compare_strategies(const Graph& g, const std::vector<RemovalPlan>& plans);

}  // namespace noderank
