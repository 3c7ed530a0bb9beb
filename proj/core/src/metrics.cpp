#include "noderank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "noderank/error.hpp"
#include "noderank/parallel.hpp"
#include "noderank/random.hpp"

namespace noderank {

namespace {

void check_node(const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    fail(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " not in graph of " +
                                         std::to_string(g.node_count()) + " nodes");
  }
}

// BFS into caller-owned buffers; returns (sum of distances, max distance,
// reached count excluding source).
struct Sweep {
  std::uint64_t distance_sum = 0;
  std::uint32_t eccentricity = 0;
  std::size_t reached = 0;
};

Sweep bfs_sweep(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                std::vector<NodeId>& queue) {
  Sweep s;
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    const std::uint32_t dv = dist[v];
    s.distance_sum += dv;
    s.eccentricity = std::max(s.eccentricity, dv);
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  s.reached = queue.size() - 1;
  for (NodeId v : queue) dist[v] = kUnreachable;
  return s;
}

}  // namespace

double density(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(ErrorCode::DegenerateGraph, "density needs at least 2 nodes");
  return static_cast<double>(g.edge_count()) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double average_degree(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  double log_sum = 0.0;
  const double shift = static_cast<double>(kPowerLawKMin) - 0.5;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t k = g.degree(v);
    ++h.counts[k];
    if (k >= kPowerLawKMin) {
      ++h.tail_nodes;
      log_sum += std::log(static_cast<double>(k) / shift);
    }
  }
  if (h.tail_nodes >= kPowerLawMinTail && log_sum > 0.0) {
    h.exponent = 1.0 + static_cast<double>(h.tail_nodes) / log_sum;
  }
  return h;
}

std::size_t triangles(const Graph& g, NodeId i) {
  check_node(g, i);
  const auto ni = g.neighbors(i);
  std::size_t count = 0;
  // For each neighbor j, count neighbors k of both i and j with k > j.
  for (std::size_t x = 0; x < ni.size(); ++x) {
    const auto nj = g.neighbors(ni[x]);
    auto a = ni.begin() + static_cast<std::ptrdiff_t>(x + 1);
    auto b = std::upper_bound(nj.begin(), nj.end(), ni[x]);
    while (a != ni.end() && b != nj.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
  }
  return count;
}

double local_clustering(const Graph& g, NodeId i) {
  check_node(g, i);
  const std::size_t k = g.degree(i);
  if (k < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles(g, i)) /
         (static_cast<double>(k) * static_cast<double>(k - 1));
}

std::vector<double> clustering_coefficients(const Graph& g) {
  std::vector<double> c(g.node_count());
  for (NodeId v = 0; v < c.size(); ++v) c[v] = local_clustering(g, v);
  return c;
}

double average_clustering(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  const auto c = clustering_coefficients(g);
  return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

std::vector<std::uint32_t> k_shell(const Graph& g) {
  // Batagelj-Zaversnik: nodes bucketed by residual degree, processed in
  // nondecreasing order; a node's coreness is its residual degree when popped.
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> deg(n);
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max<std::size_t>(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> order(n);
  std::vector<std::size_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::uint32_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const NodeId w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  check_node(g, source);
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

PathStats path_stats(const Graph& g, const PathOptions& options) {
  if (g.node_count() < 2) fail(ErrorCode::DegenerateGraph, "path statistics need at least 2 nodes");
  std::vector<NodeId> lcc = largest_connected_component(g);
  if (lcc.size() < 2) {
    fail(ErrorCode::DegenerateGraph, "largest connected component has fewer than 2 nodes");
  }
  PathStats stats;
  stats.lcc_size = lcc.size();

  std::vector<NodeId> sources = lcc;
  if (lcc.size() > options.exact_limit && options.sample_sources < lcc.size()) {
    stats.estimated = true;
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.sample_sources; ++i) {
      std::swap(sources[i], sources[i + rng.index(sources.size() - i)]);
    }
    sources.resize(options.sample_sources);
    std::sort(sources.begin(), sources.end());
  }
  stats.sources = sources.size();

  const std::size_t blocks = block_count(sources.size());
  std::vector<std::uint64_t> sums(blocks, 0);
  std::vector<std::uint32_t> ecc(blocks, 0);
  parallel_blocks(blocks, [&](std::size_t b) {
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    const auto range = block_range(sources.size(), b);
    for (std::size_t i = range.begin; i < range.end; ++i) {
      const Sweep s = bfs_sweep(g, sources[i], dist, queue);
      sums[b] += s.distance_sum;
      ecc[b] = std::max(ecc[b], s.eccentricity);
    }
  });
  const std::uint64_t total = std::accumulate(sums.begin(), sums.end(), std::uint64_t{0});
  stats.diameter = *std::max_element(ecc.begin(), ecc.end());
  const double pairs = static_cast<double>(sources.size()) * static_cast<double>(lcc.size() - 1);
  stats.average_path_length = static_cast<double>(total) / pairs;
  return stats;
}

GraphSummary summarize(const Graph& g, const PathOptions& options) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.density = density(g);
  s.average_degree = average_degree(g);
  const PathStats paths = path_stats(g, options);
  s.diameter = paths.diameter;
  s.average_path_length = paths.average_path_length;
  s.path_estimated = paths.estimated;
  s.lcc_size = paths.lcc_size;
  s.average_clustering = average_clustering(g);
  const auto shells = k_shell(g);
  s.max_k_shell = shells.empty() ? 0 : *std::max_element(shells.begin(), shells.end());
  return s;
}

}  // namespace noderank
