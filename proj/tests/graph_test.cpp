#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "noderank/error.hpp"
#include "noderank/generate.hpp"
#include "noderank/graph.hpp"
#include "oracles.hpp"

namespace noderank {
namespace {

EdgeListLoad load(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Usage;
}

void expect_invariants(const Graph& g) {
  std::size_t endpoint_slots = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    endpoint_slots += nb.size();
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end()) << "duplicate neighbor at " << v;
    for (NodeId w : nb) {
      EXPECT_NE(w, v);
      EXPECT_TRUE(g.has_edge(w, v));
    }
  }
  EXPECT_EQ(endpoint_slots, 2 * g.edge_count());
}

TEST(LoadEdgeList, PathOfThree) {
  auto r = load("0 1\n1 2");
  EXPECT_EQ(r.graph.node_count(), 3u);
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_TRUE(r.warnings.empty());
  expect_invariants(r.graph);
}

TEST(LoadEdgeList, DropsDuplicatesAndLoopsWithWarnings) {
  auto r = load("a b\nb a\na a");
  EXPECT_EQ(r.graph.node_count(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.dropped_duplicates, 1u);
  EXPECT_EQ(r.dropped_self_loops, 1u);
  EXPECT_EQ(r.graph.label(0), "a");
  EXPECT_EQ(r.graph.label(1), "b");
}

TEST(LoadEdgeList, CommentsCommasAndFirstAppearanceOrder) {
  auto r = load("# header\nx,y  # trailing\n\n  z\ty\n");
  ASSERT_EQ(r.graph.node_count(), 3u);
  EXPECT_EQ(r.graph.label(0), "x");
  EXPECT_EQ(r.graph.label(1), "y");
  EXPECT_EQ(r.graph.label(2), "z");
  EXPECT_TRUE(r.graph.has_edge(2, 1));
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  try {
    load("0 1\n1 2 3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedLine);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { load("0\n"); }), ErrorCode::MalformedLine);
}

TEST(LoadEdgeList, EmptyInput) {
  EXPECT_EQ(code_of([] { load(""); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { load("# only a comment\n"); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { load("a a\n"); }), ErrorCode::EmptyInput);
}

TEST(LoadEdgeList, RoundTripIsOrderIndependent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(30, 0.15, 100 + trial);
    if (g.edge_count() == 0) continue;
    auto edges = g.edges();
    std::vector<std::string> lines;
    for (auto [u, v] : edges) {
      if (rng() & 1) std::swap(u, v);
      lines.push_back(std::to_string(u) + " " + std::to_string(v));
    }
    // Repeats should vanish too.
    lines.push_back(lines.front());
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text;
    for (const auto& l : lines) text += l + "\n";

    const Graph loaded = load(text).graph;
    std::ostringstream out;
    write_edge_list(out, loaded);
    const Graph reloaded = load(out.str()).graph;

    auto label_set = [](const Graph& h) {
      std::set<std::pair<std::string, std::string>> s;
      for (auto [u, v] : h.edges()) {
        auto a = h.label(u), b = h.label(v);
        if (b < a) std::swap(a, b);
        s.emplace(a, b);
      }
      return s;
    };
    EXPECT_EQ(label_set(loaded), label_set(reloaded));
    std::set<std::pair<std::string, std::string>> original;
    for (auto [u, v] : edges) {
      auto a = std::to_string(u), b = std::to_string(v);
      if (b < a) std::swap(a, b);
      original.emplace(a, b);
    }
    EXPECT_EQ(label_set(loaded), original);
  }
}

TEST(Graph, FromEdgesRejectsOutOfRange) {
  std::vector<Edge> e{{0, 5}};
  EXPECT_EQ(code_of([&] { Graph::from_edges(3, e); }), ErrorCode::IndexOutOfRange);
}

TEST(RemoveNodes, TriangleMinusOneIsK2) {
  const Graph k3 = oracle::complete(3);
  const NodeId victims[] = {1};
  const auto sub = remove_nodes(k3, victims);
  EXPECT_EQ(sub.graph.node_count(), 2u);
  EXPECT_EQ(sub.graph.edge_count(), 1u);
  EXPECT_EQ(sub.original, (std::vector<NodeId>{0, 2}));
}

TEST(RemoveNodes, PathMinusMiddleIsTwoIsolatedNodes) {
  const NodeId victims[] = {1};
  const auto sub = remove_nodes(oracle::path(3), victims);
  EXPECT_EQ(sub.graph.node_count(), 2u);
  EXPECT_EQ(sub.graph.edge_count(), 0u);
}

TEST(RemoveNodes, EmptyVictimSetIsIdentity) {
  const Graph g = oracle::random_graph(40, 0.1, 3);
  const auto sub = remove_nodes(g, {});
  EXPECT_EQ(sub.graph.edges(), g.edges());
  EXPECT_EQ(sub.graph.node_count(), g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_EQ(sub.original[v], v);
}

TEST(RemoveNodes, OutOfRange) {
  const NodeId victims[] = {7};
  EXPECT_EQ(code_of([&] { remove_nodes(oracle::path(3), victims); }), ErrorCode::IndexOutOfRange);
}

TEST(RemoveNodes, TopDegreeRemovalShrinksScaleFreeLcc) {
  const Graph g = generate({GraphModel::ScaleFree, 1000, 2500, 42});
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  order.resize(50);
  const auto before = oracle::lcc_union_find(g).size();
  const auto after = oracle::lcc_union_find(remove_nodes(g, order).graph).size();
  EXPECT_LT(after, before);
}

TEST(LargestComponent, Basics) {
  EXPECT_EQ(largest_connected_component(oracle::path(3)), (std::vector<NodeId>{0, 1, 2}));
  // K3 on {2,3,4} plus K2 on {0,1}.
  const Graph g = oracle::make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(largest_connected_component(g), (std::vector<NodeId>{2, 3, 4}));
  EXPECT_TRUE(largest_connected_component(Graph{}).empty());
  // Equal sizes: the component holding node 0 wins.
  const Graph tie = oracle::make_graph(4, {{2, 3}, {0, 1}});
  EXPECT_EQ(largest_connected_component(tie), (std::vector<NodeId>{0, 1}));
}

TEST(LargestComponent, MatchesUnionFindOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(200, 0.006, seed);
    EXPECT_EQ(largest_connected_component(g), oracle::lcc_union_find(g)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace noderank
