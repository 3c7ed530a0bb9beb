#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "noderank/graph.hpp"

namespace noderank {

struct SirParams {
  /// Per-contact, per-step infection probability; empty selects the
  /// mean-field default (see auto_beta).
  std::optional<double> beta;
  double beta_multiplier = 1.5;
  double mu = 1.0;
  std::size_t max_steps = 10000;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

/// multiplier * <k> / (<k^2> - <k>), clamped to (0, 1]. Graphs whose
/// denominator is not positive get 1.
double auto_beta(const Graph& g, double multiplier = 1.5);

/// Explicit beta if set, auto_beta otherwise. Throws InvalidArgument for
/// probabilities outside (0, 1].
double resolve_beta(const Graph& g, const SirParams& params);

struct SirCounts {
  std::size_t susceptible = 0;
  std::size_t infected = 0;
  std::size_t recovered = 0;
};

/// Called after the seeding (step 0) and after every step of every trial.
using SirObserver = std::function<void(std::size_t trial, std::size_t step, const SirCounts&)>;

struct SpreadResult {
  std::vector<NodeId> seeds;
  SirParams params;
  double beta = 0.0;  ///< resolved
  double mean_outbreak = 0.0;
  double stddev = 0.0;
  std::size_t trials = 0;
  std::vector<double> per_trial;
};

/// Discrete-time synchronous SIR. Each step every infected node infects each
/// susceptible neighbor with probability beta, then recovers with
/// probability mu. The outbreak fraction is the share of nodes ever
/// infected.
///
/// Random draws are hashed from (seed, trial, node, neighbor, infectious
/// age), so runs at different beta share common random numbers and the
/// outbreak is monotone in beta. Trials run in parallel unless an observer
/// is supplied. Throws EmptySeeds, IndexOutOfRange, InvalidArgument.
SpreadResult sir_simulate(const Graph& g, std::span<const NodeId> seeds, const SirParams& params,
                          const SirObserver& observer = {});

struct RankingValidation {
  std::size_t k = 0;
  std::vector<NodeId> top_nodes;
  std::vector<NodeId> random_nodes;
  /// Mean single-seed outbreak fraction over the k nodes.
  double top_mean = 0.0;
  double random_mean = 0.0;
  double ratio = 0.0;
  double beta = 0.0;
};

/// Single-seed spreading power of the top-k ranked nodes against k uniformly
/// drawn nodes, every node simulated on the same trial streams.
RankingValidation validate_ranking(const Graph& g, std::span<const NodeId> ranking, std::size_t k,
                                   const SirParams& params);

}  // namespace noderank
