#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "noderank/error.hpp"
#include "noderank/generate.hpp"
#include "noderank/metrics.hpp"
#include "oracles.hpp"

namespace noderank {
namespace {

// Graph with N nodes and exactly E edges (no structure needed for formulas).
Graph sized(std::size_t n, std::size_t e) { return generate({GraphModel::UniformRandom, n, e, 1}); }

TEST(Density, ReportedConvention) {
  EXPECT_NEAR(density(sized(1000, 3000)), 0.003003003003003003, 1e-12);
  EXPECT_NEAR(density(sized(10000, 25000)), 0.00025002500250025, 1e-12);
  EXPECT_DOUBLE_EQ(density(oracle::complete(3)), 0.5);
  for (std::size_t n = 2; n < 12; ++n) EXPECT_DOUBLE_EQ(density(oracle::complete(n)), 0.5);
  EXPECT_THROW(density(Graph::from_edges(1, {})), Error);
}

TEST(AverageDegree, Formula) {
  EXPECT_EQ(average_degree(sized(10000, 25000)), 5.0);
  EXPECT_EQ(average_degree(sized(1000, 3000)), 6.0);
  EXPECT_EQ(average_degree(Graph::from_edges(4, {})), 0.0);
}

TEST(DegreeHistogram, SmallGraphs) {
  const auto k4 = degree_histogram(oracle::complete(4));
  EXPECT_EQ(k4.counts, (std::map<std::size_t, std::size_t>{{3, 4}}));
  EXPECT_FALSE(k4.exponent.has_value());
  const auto s = degree_histogram(oracle::star(5));
  EXPECT_EQ(s.counts, (std::map<std::size_t, std::size_t>{{1, 5}, {5, 1}}));
}

TEST(DegreeHistogram, ScaleFreeConcentration) {
  const Graph g = generate({GraphModel::ScaleFree, 10000, 25000, 42});
  const auto h = degree_histogram(g);
  std::size_t total = 0;
  for (auto [k, c] : h.counts) total += c;
  EXPECT_EQ(total, g.node_count());
  ASSERT_TRUE(h.exponent.has_value());
  EXPECT_GT(*h.exponent, 1.5);
  EXPECT_LT(*h.exponent, 4.0);

  auto d = g.degrees();
  std::sort(d.rbegin(), d.rend());
  const std::size_t top = d.size() / 20;
  const auto top_slots = std::accumulate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(top), std::size_t{0});
  EXPECT_GE(static_cast<double>(top_slots), 0.25 * 2.0 * static_cast<double>(g.edge_count()));
}

TEST(Clustering, Basics) {
  const Graph k3 = oracle::complete(3);
  for (NodeId v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(local_clustering(k3, v), 1.0);
  EXPECT_DOUBLE_EQ(local_clustering(oracle::star(4), 0), 0.0);
  EXPECT_DOUBLE_EQ(average_clustering(k3), 1.0);
  EXPECT_DOUBLE_EQ(average_clustering(oracle::path(3)), 0.0);
  EXPECT_THROW(local_clustering(k3, 3), Error);
}

TEST(Clustering, MatchesBruteForceTriangles) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_graph(100, 0.08, seed);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      EXPECT_EQ(triangles(g, v), oracle::triangles_brute(g, v));
      const double c = local_clustering(g, v);
      EXPECT_EQ(c, oracle::clustering_brute(g, v));
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
      sum += oracle::clustering_brute(g, v);
    }
    EXPECT_DOUBLE_EQ(average_clustering(g), sum / 100.0);
  }
}

TEST(Clustering, OneExactlyForCliqueNeighborhoods) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_graph(25, 0.3, seed);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) < 2) continue;
      bool clique = true;
      auto nb = g.neighbors(v);
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) clique = clique && g.has_edge(nb[a], nb[b]);
      EXPECT_EQ(local_clustering(g, v) == 1.0, clique);
    }
  }
}

TEST(KShell, Examples) {
  EXPECT_EQ(k_shell(oracle::cycle(5)), std::vector<std::uint32_t>(5, 2));
  EXPECT_EQ(k_shell(oracle::star(5)), std::vector<std::uint32_t>(6, 1));
  // K4 on {0..3} plus pendant 4 hanging off node 0.
  const Graph g = oracle::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  EXPECT_EQ(k_shell(g), (std::vector<std::uint32_t>{3, 3, 3, 3, 1}));
  EXPECT_EQ(k_shell(g), oracle::k_shell_by_peeling(g));
  EXPECT_EQ(k_shell(Graph::from_edges(3, {})), std::vector<std::uint32_t>(3, 0));
}

TEST(KShell, MatchesPeelingAndBoundedByDegree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(20 + seed * 4, 0.02 + 0.004 * static_cast<double>(seed % 10), seed);
    const auto shells = k_shell(g);
    EXPECT_EQ(shells, oracle::k_shell_by_peeling(g)) << "seed " << seed;
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_LE(shells[v], g.degree(v));
  }
}

TEST(Bfs, Examples) {
  EXPECT_EQ(bfs_distances(oracle::path(3), 0), (std::vector<std::uint32_t>{0, 1, 2}));
  const Graph g = oracle::make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto d = bfs_distances(g, 0);
  EXPECT_EQ(d[3], kUnreachable);
  EXPECT_EQ(d[4], kUnreachable);
  EXPECT_THROW(bfs_distances(g, 9), Error);
}

TEST(Bfs, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_graph(50, 0.05, seed);
    const auto fw = oracle::floyd_warshall(g);
    for (NodeId s = 0; s < g.node_count(); ++s) EXPECT_EQ(bfs_distances(g, s), fw[s]);
  }
}

TEST(PathStats, Examples) {
  const auto p3 = path_stats(oracle::path(3));
  EXPECT_DOUBLE_EQ(p3.average_path_length, 4.0 / 3.0);
  EXPECT_EQ(p3.diameter, 2u);
  const auto c4 = path_stats(oracle::cycle(4));
  EXPECT_DOUBLE_EQ(c4.average_path_length, 4.0 / 3.0);
  EXPECT_EQ(c4.diameter, 2u);
  EXPECT_FALSE(c4.estimated);
  EXPECT_THROW(path_stats(Graph::from_edges(3, {})), Error);
}

TEST(PathStats, RestrictedToLargestComponent) {
  // P3 on {0,1,2} plus an isolated edge {3,4}.
  const Graph g = oracle::make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto s = path_stats(g);
  EXPECT_EQ(s.lcc_size, 3u);
  EXPECT_DOUBLE_EQ(s.average_path_length, 4.0 / 3.0);
}

TEST(PathStats, MeanBelowDiameterAndEdgeAdditionNeverLengthens) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_connected_graph(40, 0.03, seed);
    const auto s = path_stats(g);
    EXPECT_LE(s.average_path_length, s.diameter);
    const auto before = oracle::floyd_warshall(g);
    auto edges = g.edges();
    edges.emplace_back(static_cast<NodeId>(seed), 39);
    const Graph h = Graph::from_edges(40, edges);
    const auto after = oracle::floyd_warshall(h);
    for (std::size_t i = 0; i < 40; ++i)
      for (std::size_t j = 0; j < 40; ++j) EXPECT_LE(after[i][j], before[i][j]);
    EXPECT_LE(path_stats(h).average_path_length, s.average_path_length);
  }
}

TEST(PathStats, SamplingAboveLimit) {
  const Graph g = oracle::random_connected_graph(300, 0.01, 5);
  const auto exact = path_stats(g);
  PathOptions sampled;
  sampled.exact_limit = 100;
  sampled.sample_sources = 150;
  const auto est = path_stats(g, sampled);
  EXPECT_TRUE(est.estimated);
  EXPECT_EQ(est.sources, 150u);
  EXPECT_LE(est.diameter, exact.diameter);
  EXPECT_NEAR(est.average_path_length, exact.average_path_length, 0.1 * exact.average_path_length);
}

TEST(Summary, Invariants) {
  const Graph g = generate({GraphModel::ScaleFree, 2000, 5000, 42});
  const auto s = summarize(g);
  EXPECT_GE(s.density, 0.0);
  EXPECT_LE(s.density, 1.0);
  EXPECT_DOUBLE_EQ(s.average_degree, 2.0 * static_cast<double>(g.edge_count()) / 2000.0);
  EXPECT_LE(s.average_path_length, s.diameter);
  EXPECT_GE(s.max_k_shell, 2u);
}

}  // namespace
}  // namespace noderank
