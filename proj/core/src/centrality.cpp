#include "noderank/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "noderank/error.hpp"
#include "noderank/metrics.hpp"
#include "noderank/parallel.hpp"

namespace noderank {

CentralityVector degree_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(ErrorCode::DegenerateGraph, "degree centrality needs at least 2 nodes");
  CentralityVector c{Measure::Degree, std::vector<double>(n), "degree/(N-1)"};
  for (NodeId v = 0; v < n; ++v) {
    c.values[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
  }
  return c;
}

std::vector<double> betweenness_raw(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t blocks = block_count(n);
  std::vector<std::vector<double>> partial(blocks);

  parallel_blocks(blocks, [&](std::size_t b) {
    auto& acc = partial[b];
    acc.assign(n, 0.0);
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;
    order.reserve(n);
    const auto range = block_range(n, b);
    for (auto s = static_cast<NodeId>(range.begin); s < range.end; ++s) {
      order.clear();
      order.push_back(s);
      dist[s] = 0;
      sigma[s] = 1.0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] == kUnreachable) {
            dist[w] = dist[v] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      // Reverse BFS order: predecessors of w are neighbors one hop closer.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.neighbors(w)) {
          if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != s) acc[w] += delta[w];
      }
      for (NodeId v : order) {
        dist[v] = kUnreachable;
        sigma[v] = 0.0;
        delta[v] = 0.0;
      }
    }
  });

  std::vector<double> raw(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) raw[v] += acc[v];
  }
  for (auto& x : raw) x /= 2.0;
  return raw;
}

CentralityVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) fail(ErrorCode::DegenerateGraph, "betweenness centrality needs at least 3 nodes");
  CentralityVector c{Measure::Betweenness, betweenness_raw(g), "pairs/((N-1)(N-2)/2)"};
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (auto& x : c.values) x /= pairs;
  return c;
}

CentralityVector closeness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(ErrorCode::DegenerateGraph, "closeness centrality needs at least 2 nodes");
  CentralityVector c{Measure::Closeness, std::vector<double>(n, 0.0), "reachable-scaled (N-1)/sum d"};
  const std::size_t blocks = block_count(n);
  parallel_blocks(blocks, [&](std::size_t b) {
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const auto range = block_range(n, b);
    for (auto s = static_cast<NodeId>(range.begin); s < range.end; ++s) {
      queue.clear();
      queue.push_back(s);
      dist[s] = 0;
      std::uint64_t sum = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        sum += dist[v];
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] == kUnreachable) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      const auto reached = static_cast<double>(queue.size() - 1);
      if (sum > 0) {
        c.values[s] = reached / static_cast<double>(n - 1) * (reached / static_cast<double>(sum));
      }
      for (NodeId v : queue) dist[v] = kUnreachable;
    }
  });
  return c;
}

CentralityVector eigenvector_centrality(const Graph& g, const EigenvectorOptions& options) {
  const std::size_t n = g.node_count();
  if (g.edge_count() == 0) fail(ErrorCode::DegenerateGraph, "eigenvector centrality needs an edge");
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  CentralityVector c{Measure::Eigenvector, {}, "max entry 1"};
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    double peak = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double sum = options.damping * x[v];
      for (NodeId w : g.neighbors(v)) sum += x[w];
      y[v] = sum;
      peak = std::max(peak, sum);
    }
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      y[v] /= peak;
      change = std::max(change, std::abs(y[v] - x[v]));
    }
    x.swap(y);
    if (change < options.tolerance) {
      c.values = std::move(x);
      c.eigenvalue = peak - options.damping;
      c.iterations = iter;
      return c;
    }
  }
  fail(ErrorCode::NoConvergence, "power iteration did not converge in " +
                                     std::to_string(options.max_iterations) + " iterations");
}

CentralityVector eigenvector_centrality_with_retry(const Graph& g,
                                                   const EigenvectorOptions& options) {
  try {
    return eigenvector_centrality(g, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoConvergence) throw;
  }
  EigenvectorOptions damped = options;
  damped.damping = kEigenvectorRetryDamping;
  damped.max_iterations = options.max_iterations * 100;
  return eigenvector_centrality(g, damped);
}

}  // namespace noderank
