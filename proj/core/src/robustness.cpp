#include "noderank/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "noderank/error.hpp"
#include "noderank/influence.hpp"
#include "noderank/parallel.hpp"
#include "noderank/random.hpp"

namespace noderank {

namespace {

void validate(const Graph& g, const RemovalPlan& plan) {
  if (g.node_count() < 10) {
    fail(ErrorCode::PlanInfeasible, "robustness runs need at least 10 nodes");
  }
  if (!(plan.step_fraction > 0.0 && plan.step_fraction <= plan.max_fraction &&
        plan.max_fraction <= 1.0)) {
    fail(ErrorCode::PlanInfeasible, "need 0 < step <= max <= 1 (step " +
                                        std::to_string(plan.step_fraction) + ", max " +
                                        std::to_string(plan.max_fraction) + ")");
  }
  if (plan.trials < 1) fail(ErrorCode::PlanInfeasible, "trials must be at least 1");
}

std::size_t step_count(const RemovalPlan& plan) {
  return static_cast<std::size_t>(std::floor(plan.max_fraction / plan.step_fraction + 1e-9));
}

// LCC size among alive nodes.
std::size_t alive_lcc(const Graph& g, const std::vector<char>& alive, std::vector<char>& seen,
                      std::vector<NodeId>& queue) {
  std::fill(seen.begin(), seen.end(), 0);
  std::size_t best = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (!alive[s] || seen[s]) continue;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, queue.size());
  }
  return best;
}

std::vector<NodeId> static_order(const Graph& g, const RemovalPlan& plan) {
  if (plan.strategy == RemovalStrategy::TargetedDegree) {
    std::vector<double> degree(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degree[v] = static_cast<double>(g.degree(v));
    return rank_order(degree);
  }
  return rank_by(plan.measure, g).order;
}

// Next `count` victims chosen by ranking the surviving graph.
std::vector<NodeId> adaptive_victims(const Graph& g, const RemovalPlan& plan,
                                     const std::vector<NodeId>& removed, std::size_t count) {
  const Subgraph sub = remove_nodes(g, removed);
  const std::vector<NodeId> order = static_order(sub.graph, plan);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < count && i < order.size(); ++i) out.push_back(sub.original[order[i]]);
  return out;
}

}  // namespace

std::string plan_label(const RemovalPlan& plan) {
  std::string label;
  switch (plan.strategy) {
    case RemovalStrategy::Random: return "random";
    case RemovalStrategy::TargetedDegree: label = "targeted_degree"; break;
    case RemovalStrategy::TargetedMeasure: label = "targeted_" + std::string(to_string(plan.measure)); break;
  }
  return plan.adaptive ? label + "_adaptive" : label;
}

RobustnessCurve run_removal(const Graph& g, const RemovalPlan& plan) {
  validate(g, plan);
  const std::size_t n = g.node_count();
  const std::size_t steps = step_count(plan);
  const bool random = plan.strategy == RemovalStrategy::Random;
  const std::size_t trials = random ? plan.trials : 1;

  RobustnessCurve curve;
  curve.label = plan_label(plan);
  curve.trials = trials;
  curve.baseline_lcc = largest_connected_component(g).size();
  curve.per_trial.assign(trials, std::vector<double>(steps + 1, 0.0));

  std::vector<std::size_t> removed_at(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double f = std::min(1.0, static_cast<double>(k) * plan.step_fraction);
    removed_at[k] = std::min(n, static_cast<std::size_t>(std::llround(f * static_cast<double>(n))));
  }

  std::vector<NodeId> fixed_order;
  if (!random && !plan.adaptive) fixed_order = static_order(g, plan);

  parallel_blocks(trials, [&](std::size_t t) {
    std::vector<NodeId> order;
    if (random) {
      order.resize(n);
      std::iota(order.begin(), order.end(), NodeId{0});
      Rng rng(stream_seed(plan.seed, t));
      for (std::size_t i = 0; i + 1 < n; ++i) std::swap(order[i], order[i + rng.index(n - i)]);
    } else {
      order = fixed_order;
    }
    std::vector<char> alive(n, 1);
    std::vector<char> seen(n, 0);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::vector<NodeId> removed;
    for (std::size_t k = 0; k <= steps; ++k) {
      const std::size_t target = removed_at[k];
      if (plan.adaptive && !random && target > removed.size()) {
        for (NodeId v : adaptive_victims(g, plan, removed, target - removed.size())) {
          alive[v] = 0;
          removed.push_back(v);
        }
      } else {
        while (removed.size() < target) {
          const NodeId v = order[removed.size()];
          alive[v] = 0;
          removed.push_back(v);
        }
      }
      const std::size_t lcc = alive_lcc(g, alive, seen, queue);
      curve.per_trial[t][k] =
          curve.baseline_lcc == 0 ? 0.0 : static_cast<double>(lcc) / static_cast<double>(curve.baseline_lcc);
    }
  });

  curve.points.resize(steps + 1);
  double auc = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    double mean = 0.0;
    for (std::size_t t = 0; t < trials; ++t) mean += curve.per_trial[t][k];
    mean /= static_cast<double>(trials);
    double var = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const double d = curve.per_trial[t][k] - mean;
      var += d * d;
    }
    const double stddev = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1)) : 0.0;
    curve.points[k] = {static_cast<double>(k) * plan.step_fraction, mean, stddev};
    auc += mean;
  }
  curve.auc = auc / static_cast<double>(steps + 1);
  return curve;
}

StrategyComparison compare_strategies(const Graph& g, const std::vector<RemovalPlan>& plans) {
  if (plans.size() < 2) fail(ErrorCode::PlanInfeasible, "comparison needs at least 2 plans");
  for (const auto& p : plans) {
    if (p.step_fraction != plans.front().step_fraction || p.max_fraction != plans.front().max_fraction) {
      fail(ErrorCode::PlanInfeasible, "compared plans must share step and max fractions");
    }
  }
  StrategyComparison c;
  for (const auto& p : plans) c.curves.push_back(run_removal(g, p));
  return c;
}

}  // namespace noderank
