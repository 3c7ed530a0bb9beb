#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "noderank/graph.hpp"
#include "noderank/ranking.hpp"

namespace noderank {

struct CentralityVector {
  Measure measure = Measure::Degree;
  std::vector<double> values;
  /// Short description of the scaling applied to `values`.
  std::string_view normalization;
  /// Eigenvector centrality only: estimated leading eigenvalue and the
  /// iterations used.
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
};

/// degree / (N - 1). Throws DegenerateGraph for N < 2.
CentralityVector degree_centrality(const Graph& g);

/// Shortest-path dependency per node summed over unordered source/target
/// pairs (Brandes accumulation, halved for undirected graphs).
std::vector<double> betweenness_raw(const Graph& g);

/// betweenness_raw / ((N-1)(N-2)/2), so a star center scores 1.
/// Throws DegenerateGraph for N < 3.
CentralityVector betweenness_centrality(const Graph& g);

/// (r / (N-1)) * (r / sum of distances to the r reachable nodes); equals
/// (N-1) / sum d on connected graphs and 0 for isolated nodes.
/// Throws DegenerateGraph for N < 2.
CentralityVector closeness_centrality(const Graph& g);

struct EigenvectorOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
  /// Iterates x <- A x + damping * x. Shifting the spectrum by a positive
  /// damping breaks the +/- lambda tie on bipartite components.
  double damping = 0.0;
};

/// Power iteration from the all-ones vector, scaled so the largest entry
/// is 1. Converged when successive iterates differ by less than tolerance
/// in the max norm. Throws NoConvergence after max_iterations and
/// DegenerateGraph for a graph without edges.
CentralityVector eigenvector_centrality(const Graph& g, const EigenvectorOptions& options = {});

inline constexpr double kEigenvectorRetryDamping = 1e-3;

/// Undamped attempt first; on NoConvergence retries with damping 1e-3 and
/// 100x the iteration budget.
CentralityVector eigenvector_centrality_with_retry(const Graph& g,
                                                   const EigenvectorOptions& options = {});

}  // namespace noderank
