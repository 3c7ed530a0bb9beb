#include "noderank/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "noderank/error.hpp"
#include "noderank/random.hpp"

namespace noderank {

std::string_view to_string(GraphModel model) noexcept {
  return model == GraphModel::ScaleFree ? "scale_free" : "uniform_random";
}

namespace {

std::uint64_t max_edges(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

std::vector<Edge> clique(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

Graph scale_free(const GeneratorSpec& spec) {
  const std::size_t n = spec.nodes;
  const std::size_t e = spec.target_edges;
  if (e < n - 1) {
    fail(ErrorCode::InfeasibleSpec, "scale_free growth needs at least nodes-1 = " +
                                        std::to_string(n - 1) + " edges, got " + std::to_string(e));
  }
  // Seed clique large enough that the first grown node can place ceil(m) links.
  const auto seed_size = std::min<std::size_t>(n, (e + n - 1) / n + 1);
  const std::uint64_t seed_edges = max_edges(seed_size);
  if (seed_size == n) {
    if (e != seed_edges) {
      fail(ErrorCode::InfeasibleSpec, "cannot place " + std::to_string(e) + " edges on " +
                                          std::to_string(n) + " nodes by preferential attachment");
    }
    return Graph::from_edges(n, clique(n));
  }
  const double mean_links = static_cast<double>(e - seed_edges) / static_cast<double>(n - seed_size);
  const auto low = static_cast<std::size_t>(std::floor(mean_links));
  const double frac = mean_links - static_cast<double>(low);
  const std::size_t high = frac > 0.0 ? low + 1 : low;
  if (low < 1 || high > seed_size) {
    fail(ErrorCode::InfeasibleSpec, "per-step attachment " + std::to_string(mean_links) +
                                        " outside [1, " + std::to_string(seed_size) + "]");
  }

  Rng rng(spec.seed);
  std::vector<Edge> edges = clique(seed_size);
  edges.reserve(e + n);
  // Every edge contributes both endpoints, so uniform draws from this list
  // select nodes proportionally to degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (e + n));
  for (const auto& [u, v] : edges) {
    endpoints.push_back(u);
    endpoints.push_back(v);
  }
  std::vector<NodeId> chosen;
  for (auto v = static_cast<NodeId>(seed_size); v < n; ++v) {
    const std::size_t links = (frac > 0.0 && rng.bernoulli(frac)) ? high : low;
    chosen.clear();
    while (chosen.size() < links) {
      NodeId target = endpoints[rng.index(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (NodeId t : chosen) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph uniform_random(const GeneratorSpec& spec) {
  const std::size_t n = spec.nodes;
  const std::uint64_t total = max_edges(n);
  const std::size_t e = spec.target_edges;
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(e);

  auto pair_of = [n](std::uint64_t index) {
    // Row-major enumeration of the strict upper triangle.
    NodeId u = 0;
    std::uint64_t row = n - 1;
    while (index >= row) {
      index -= row;
      ++u;
      --row;
    }
    return Edge{u, static_cast<NodeId>(u + 1 + index)};
  };

  if (2 * e >= total) {
    // Dense: partial Fisher-Yates over all pair indices.
    std::vector<std::uint64_t> pool(total);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    for (std::size_t i = 0; i < e; ++i) {
      std::swap(pool[i], pool[i + rng.index(total - i)]);
      edges.push_back(pair_of(pool[i]));
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * e);
    while (edges.size() < e) {
      auto u = static_cast<NodeId>(rng.index(n));
      auto v = static_cast<NodeId>(rng.index(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  if (spec.nodes < 2) {
    fail(ErrorCode::InfeasibleSpec, "need at least 2 nodes, got " + std::to_string(spec.nodes));
  }
  if (spec.target_edges > max_edges(spec.nodes)) {
    fail(ErrorCode::InfeasibleSpec, std::to_string(spec.target_edges) + " edges exceed the " +
                                        std::to_string(max_edges(spec.nodes)) + " pairs of " +
                                        std::to_string(spec.nodes) + " nodes");
  }
  return spec.model == GraphModel::ScaleFree ? scale_free(spec) : uniform_random(spec);
}

}  // namespace noderank
