#include <gtest/gtest.h>

#include "noderank/error.hpp"
#include "noderank/generate.hpp"
#include "noderank/robustness.hpp"
#include "oracles.hpp"

namespace noderank {
namespace {

RemovalPlan plan(RemovalStrategy s, double step = 0.01, double max = 0.3) {
  RemovalPlan p;
  p.strategy = s;
  p.step_fraction = step;
  p.max_fraction = max;
  p.seed = 9;
  return p;
}

TEST(Removal, IntactPointIsOne) {
  const Graph g = oracle::random_graph(200, 0.03, 1);
  for (auto s : {RemovalStrategy::Random, RemovalStrategy::TargetedDegree}) {
    const auto c = run_removal(g, plan(s));
    EXPECT_EQ(c.points.front().removed_fraction, 0.0);
    EXPECT_EQ(c.points.front().mean_lcc_fraction, 1.0);
    EXPECT_EQ(c.points.size(), 31u);
  }
}

TEST(Removal, StarCollapsesUnderTargetedAttack) {
  const Graph g = oracle::star(99);
  const auto c = run_removal(g, plan(RemovalStrategy::TargetedDegree));
  EXPECT_DOUBLE_EQ(c.points[1].mean_lcc_fraction, 1.0 / 100.0);
  EXPECT_EQ(c.trials, 1u);
}

TEST(Removal, StaticTargetedCurveIsMonotone) {
  const Graph g = generate({GraphModel::ScaleFree, 500, 1200, 3});
  for (bool adaptive : {false, true}) {
    auto p = plan(RemovalStrategy::TargetedMeasure);
    p.measure = Measure::Betweenness;
    p.adaptive = adaptive;
    const auto c = run_removal(g, p);
    for (std::size_t k = 1; k < c.points.size(); ++k)
      EXPECT_LE(c.points[k].mean_lcc_fraction, c.points[k - 1].mean_lcc_fraction);
    for (const auto& trial : c.per_trial)
      for (std::size_t k = 1; k < trial.size(); ++k) EXPECT_LE(trial[k], trial[k - 1]);
  }
}

TEST(Removal, RandomTrialsAreMonotoneAndDeterministic) {
  const Graph g = oracle::random_graph(300, 0.02, 4);
  auto p = plan(RemovalStrategy::Random);
  const auto a = run_removal(g, p);
  const auto b = run_removal(g, p);
  ASSERT_EQ(a.per_trial.size(), 10u);
  EXPECT_EQ(a.per_trial, b.per_trial);
  for (const auto& trial : a.per_trial)
    for (std::size_t k = 1; k < trial.size(); ++k) EXPECT_LE(trial[k], trial[k - 1]);
  p.seed = 10;
  EXPECT_NE(run_removal(g, p).per_trial, a.per_trial);
}

TEST(Removal, CompleteGraphStrategiesAgree) {
  const Graph g = oracle::complete(50);
  const auto cmp = compare_strategies(g, {plan(RemovalStrategy::Random), plan(RemovalStrategy::TargetedDegree)});
  ASSERT_EQ(cmp.curves.size(), 2u);
  for (std::size_t k = 0; k < cmp.curves[0].points.size(); ++k)
    EXPECT_DOUBLE_EQ(cmp.curves[0].points[k].mean_lcc_fraction, cmp.curves[1].points[k].mean_lcc_fraction);
}

TEST(Removal, InfeasiblePlans) {
  const Graph g = oracle::random_graph(100, 0.05, 1);
  EXPECT_THROW(run_removal(g, plan(RemovalStrategy::Random, 0.01, 0.0)), Error);
  EXPECT_THROW(run_removal(g, plan(RemovalStrategy::Random, 0.0, 0.3)), Error);
  EXPECT_THROW(run_removal(g, plan(RemovalStrategy::Random, 0.5, 0.3)), Error);
  EXPECT_THROW(run_removal(oracle::path(9), plan(RemovalStrategy::Random)), Error);
  EXPECT_THROW(compare_strategies(g, {plan(RemovalStrategy::Random)}), Error);
  EXPECT_THROW(compare_strategies(g, {plan(RemovalStrategy::Random), plan(RemovalStrategy::TargetedDegree, 0.02)}),
               Error);
}

TEST(Removal, ScaleFreeIsFragileToAttack) {
  const Graph g = generate({GraphModel::ScaleFree, 2000, 5000, 42});
  const auto random = run_removal(g, plan(RemovalStrategy::Random));
  const auto targeted = run_removal(g, plan(RemovalStrategy::TargetedDegree));
  EXPECT_LT(targeted.auc, random.auc);
}

TEST(Removal, Labels) {
  auto p = plan(RemovalStrategy::TargetedMeasure);
  p.measure = Measure::Fused;
  EXPECT_EQ(plan_label(p), "targeted_fused");
  p.adaptive = true;
  EXPECT_EQ(plan_label(p), "targeted_fused_adaptive");
  EXPECT_EQ(plan_label(plan(RemovalStrategy::Random)), "random");
  EXPECT_EQ(plan_label(plan(RemovalStrategy::TargetedDegree)), "targeted_degree");
}

}  // namespace
}  // namespace noderank
