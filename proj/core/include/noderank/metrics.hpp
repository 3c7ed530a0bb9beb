#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "noderank/graph.hpp"

namespace noderank {

/// E / (N (N - 1)). Note this is half the usual undirected density; it is
/// the convention under which 1000 nodes / 3000 edges gives 0.003.
/// Throws DegenerateGraph for N < 2.
double density(const Graph& g);

/// 2E / N; 0 for the empty graph.
double average_degree(const Graph& g);

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  ///< degree -> node count
  /// Discrete power-law MLE over degrees >= kPowerLawKMin; empty when fewer
  /// than kPowerLawMinTail nodes qualify.
  std::optional<double> exponent;
  std::size_t tail_nodes = 0;
};

inline constexpr std::size_t kPowerLawKMin = 2;
inline constexpr std::size_t kPowerLawMinTail = 50;

DegreeHistogram degree_histogram(const Graph& g);

/// 2 T_i / (k_i (k_i - 1)), with 0 for k_i < 2.
double local_clustering(const Graph& g, NodeId i);
std::vector<double> clustering_coefficients(const Graph& g);
double average_clustering(const Graph& g);

/// Triangles through node i.
std::size_t triangles(const Graph& g, NodeId i);

/// Coreness by iterative peeling (bucket algorithm, O(N + E)).
std::vector<std::uint32_t> k_shell(const Graph& g);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

struct PathOptions {
  /// Largest LCC for which every node is used as a BFS source.
  std::size_t exact_limit = 20000;
  /// Source sample size above exact_limit.
  std::size_t sample_sources = 1000;
  std::uint64_t seed = 0;
};

struct PathStats {
  double average_path_length = 0.0;
  std::uint32_t diameter = 0;
  std::size_t lcc_size = 0;
  std::size_t sources = 0;
  /// True when sources were sampled: the mean is an estimate and the
  /// diameter a lower bound.
  bool estimated = false;
};

/// Mean and maximum hop distance over ordered pairs inside the largest
/// connected component. Throws DegenerateGraph if the LCC has < 2 nodes.
PathStats path_stats(const Graph& g, const PathOptions& options = {});

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double density = 0.0;
  double average_degree = 0.0;
  std::uint32_t diameter = 0;
  double average_path_length = 0.0;
  bool path_estimated = false;
  std::size_t lcc_size = 0;
  double average_clustering = 0.0;
  std::uint32_t max_k_shell = 0;
};

GraphSummary summarize(const Graph& g, const PathOptions& options = {});

}  // namespace noderank
