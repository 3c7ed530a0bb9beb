#include <gtest/gtest.h>

#include <random>

#include "noderank/error.hpp"
#include "noderank/generate.hpp"
#include "noderank/propagation.hpp"
#include "oracles.hpp"

namespace noderank {
namespace {

SirParams params(double beta, std::size_t trials = 200, double mu = 1.0) {
  SirParams p;
  p.beta = beta;
  p.mu = mu;
  p.trials = trials;
  p.seed = 5;
  return p;
}

TEST(Sir, CertainTransmissionInfectsComponent) {
  const Graph g = oracle::random_connected_graph(100, 0.05, 2);
  const std::vector<NodeId> seeds{0};
  const auto r = sir_simulate(g, seeds, params(1.0, 20));
  EXPECT_DOUBLE_EQ(r.mean_outbreak, 1.0);
  EXPECT_DOUBLE_EQ(r.stddev, 0.0);
}

TEST(Sir, NegligibleBetaKeepsSeedsOnly) {
  const Graph g = oracle::random_connected_graph(100, 0.05, 2);
  const std::vector<NodeId> seeds{0, 7, 7, 9};
  const auto r = sir_simulate(g, seeds, params(1e-12, 50));
  EXPECT_NEAR(r.mean_outbreak, 3.0 / 100.0, 1e-15);
  for (double x : r.per_trial) EXPECT_EQ(x, 3.0 / 100.0);
}

TEST(Sir, StarCenterOutspreadsLeaf) {
  const Graph g = oracle::star(50);
  const std::vector<NodeId> center{0}, leaf{1};
  const auto p = params(0.3, 2000);
  EXPECT_GT(sir_simulate(g, center, p).mean_outbreak, sir_simulate(g, leaf, p).mean_outbreak);
}

TEST(Sir, ConservationAndExtinction) {
  const Graph g = generate({GraphModel::ScaleFree, 300, 900, 7});
  const std::vector<NodeId> seeds{0, 1};
  std::size_t calls = 0;
  std::size_t last_step = 0;
  const auto r = sir_simulate(g, seeds, params(0.2, 50), [&](std::size_t, std::size_t step, const SirCounts& c) {
    EXPECT_EQ(c.susceptible + c.infected + c.recovered, 300u);
    ++calls;
    if (c.infected == 0) {
      EXPECT_LE(step, 300u);
      last_step = std::max(last_step, step);
    }
  });
  EXPECT_GT(calls, 50u);
  EXPECT_GT(last_step, 0u);
  EXPECT_EQ(r.per_trial.size(), 50u);
}

TEST(Sir, MonotoneInBetaUnderCommonRandomNumbers) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(60, 0.06, rng());
    const std::vector<NodeId> seeds{static_cast<NodeId>(rng() % 60)};
    const double lo = 0.05 + 0.4 * std::uniform_real_distribution<double>()(rng);
    const double hi = lo + 0.3;
    const auto a = sir_simulate(g, seeds, params(lo, 30, 0.5));
    const auto b = sir_simulate(g, seeds, params(hi, 30, 0.5));
    for (std::size_t i = 0; i < 30; ++i) EXPECT_LE(a.per_trial[i], b.per_trial[i]);
  }
}

TEST(Sir, ThreadCountDoesNotChangeResults) {
  const Graph g = generate({GraphModel::ScaleFree, 500, 1500, 1});
  const std::vector<NodeId> seeds{3};
  const auto parallel = sir_simulate(g, seeds, params(0.1, 100));
  // An observer forces trials to run serially.
  const auto serial = sir_simulate(g, seeds, params(0.1, 100), [](std::size_t, std::size_t, const SirCounts&) {});
  EXPECT_EQ(parallel.per_trial, serial.per_trial);
}

TEST(Sir, Errors) {
  const Graph g = oracle::path(5);
  const std::vector<NodeId> none, bad{5}, ok{0};
  EXPECT_THROW(sir_simulate(g, none, params(0.5)), Error);
  EXPECT_THROW(sir_simulate(g, bad, params(0.5)), Error);
  EXPECT_THROW(sir_simulate(g, ok, params(0.0)), Error);
  EXPECT_THROW(sir_simulate(g, ok, params(0.5, 10, 1.5)), Error);
}

TEST(Sir, AutoBeta) {
  // Regular graph: <k>=3, <k^2>=9, beta = 1.5 * 3 / 6.
  EXPECT_DOUBLE_EQ(auto_beta(oracle::complete(4)), 0.75);
  EXPECT_DOUBLE_EQ(auto_beta(Graph::from_edges(3, {})), 1.0);
  EXPECT_DOUBLE_EQ(resolve_beta(oracle::complete(4), params(0.25)), 0.25);
}

TEST(Validation, CompleteGraphGivesUnitRatio) {
  const Graph g = oracle::complete(30);
  std::vector<NodeId> ranking(30);
  for (NodeId v = 0; v < 30; ++v) ranking[v] = v;
  auto p = params(0.05, 300);
  const auto v = validate_ranking(g, ranking, 5, p);
  EXPECT_EQ(v.top_nodes, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(v.random_nodes.size(), 5u);
  EXPECT_NEAR(v.ratio, 1.0, 0.1);
}

}  // namespace
}  // namespace noderank
