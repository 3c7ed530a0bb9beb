#include "noderank/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noderank/error.hpp"
#include "noderank/parallel.hpp"
#include "noderank/random.hpp"

namespace noderank {

namespace {

constexpr std::uint64_t kTransmitTag = 0x7472616e736d6974ULL;
constexpr std::uint64_t kRecoverTag = 0x7265636f76657279ULL;
constexpr std::uint64_t kRandomNodesStream = 0xfeedfacecafebeefULL;

double draw(std::uint64_t key, std::uint64_t tag, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(key ^ tag);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b << 1));
  h = splitmix64(h ^ (c << 2));
  return to_unit(h);
}

enum class State : std::uint8_t { Susceptible, Infected, Recovered };

struct Workspace {
  std::vector<State> state;
  std::vector<std::uint32_t> age;
  std::vector<NodeId> current;
  std::vector<NodeId> next;

  explicit Workspace(std::size_t n) : state(n, State::Susceptible), age(n, 0) {}
};

// Runs one trial; returns the number of nodes ever infected.
std::size_t run_trial(const Graph& g, std::span<const NodeId> seeds, double beta, double mu,
                      std::size_t max_steps, std::uint64_t key, Workspace& ws, std::size_t trial,
                      const SirObserver& observer) {
  const std::size_t n = g.node_count();
  std::fill(ws.state.begin(), ws.state.end(), State::Susceptible);
  ws.current.clear();
  for (NodeId s : seeds) {
    if (ws.state[s] == State::Susceptible) {
      ws.state[s] = State::Infected;
      ws.age[s] = 0;
      ws.current.push_back(s);
    }
  }
  SirCounts counts{n - ws.current.size(), ws.current.size(), 0};
  if (observer) observer(trial, 0, counts);

  for (std::size_t step = 1; step <= max_steps && !ws.current.empty(); ++step) {
    ws.next.clear();
    for (NodeId v : ws.current) {
      for (NodeId w : g.neighbors(v)) {
        if (ws.state[w] == State::Susceptible && draw(key, kTransmitTag, v, w, ws.age[v]) < beta) {
          ws.state[w] = State::Infected;
          ws.age[w] = 0;
          ws.next.push_back(w);
        }
      }
    }
    // Nodes infected this step only start transmitting next step.
    const std::size_t fresh = ws.next.size();
    for (NodeId v : ws.current) {
      if (draw(key, kRecoverTag, v, 0, ws.age[v]) < mu) {
        ws.state[v] = State::Recovered;
        ++counts.recovered;
      } else {
        ++ws.age[v];
        ws.next.push_back(v);
      }
    }
    counts.susceptible -= fresh;
    counts.infected = ws.next.size();
    ws.current.swap(ws.next);
    if (observer) observer(trial, step, counts);
  }
  return n - counts.susceptible;
}

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) fail(ErrorCode::EmptySeeds, "seed set is empty");
  for (NodeId s : seeds) {
    if (s >= g.node_count()) {
      fail(ErrorCode::IndexOutOfRange, "seed " + std::to_string(s) + " not in graph of " +
                                           std::to_string(g.node_count()) + " nodes");
    }
  }
}

// Mean outbreak fraction per trial for a single seed set.
std::vector<double> outbreak_trials(const Graph& g, std::span<const NodeId> seeds, double beta,
                                    const SirParams& params, const SirObserver& observer) {
  std::vector<double> fractions(params.trials, 0.0);
  const auto n = static_cast<double>(g.node_count());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    Workspace ws(g.node_count());
    for (std::size_t t = begin; t < end; ++t) {
      const std::size_t infected = run_trial(g, seeds, beta, params.mu, params.max_steps,
                                             stream_seed(params.seed, t), ws, t, observer);
      fractions[t] = static_cast<double>(infected) / n;
    }
  };
  if (observer) {
    run_range(0, params.trials);
  } else {
    const std::size_t blocks = block_count(params.trials);
    parallel_blocks(blocks, [&](std::size_t b) {
      const auto r = block_range(params.trials, b);
      run_range(r.begin, r.end);
    });
  }
  return fractions;
}

void check_params(const SirParams& params) {
  if (!(params.mu > 0.0 && params.mu <= 1.0)) fail(ErrorCode::InvalidArgument, "mu must lie in (0, 1]");
  if (params.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
}

}  // namespace

double auto_beta(const Graph& g, double multiplier) {
  const std::size_t n = g.node_count();
  if (n == 0) return 1.0;
  double k1 = 0.0;
  double k2 = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const auto k = static_cast<double>(g.degree(v));
    k1 += k;
    k2 += k * k;
  }
  k1 /= static_cast<double>(n);
  k2 /= static_cast<double>(n);
  const double denom = k2 - k1;
  if (!(denom > 0.0)) return 1.0;
  return std::clamp(multiplier * k1 / denom, std::numeric_limits<double>::min(), 1.0);
}

double resolve_beta(const Graph& g, const SirParams& params) {
  if (!params.beta) return auto_beta(g, params.beta_multiplier);
  const double beta = *params.beta;
  if (!(beta > 0.0 && beta <= 1.0)) fail(ErrorCode::InvalidArgument, "beta must lie in (0, 1]");
  return beta;
}

SpreadResult sir_simulate(const Graph& g, std::span<const NodeId> seeds, const SirParams& params,
                          const SirObserver& observer) {
  check_seeds(g, seeds);
  check_params(params);
  SpreadResult r;
  r.seeds.assign(seeds.begin(), seeds.end());
  r.params = params;
  r.beta = resolve_beta(g, params);
  r.trials = params.trials;
  r.per_trial = outbreak_trials(g, seeds, r.beta, params, observer);
  double sum = 0.0;
  for (double f : r.per_trial) sum += f;
  r.mean_outbreak = sum / static_cast<double>(r.trials);
  double var = 0.0;
  for (double f : r.per_trial) var += (f - r.mean_outbreak) * (f - r.mean_outbreak);
  r.stddev = r.trials > 1 ? std::sqrt(var / static_cast<double>(r.trials - 1)) : 0.0;
  return r;
}

RankingValidation validate_ranking(const Graph& g, std::span<const NodeId> ranking, std::size_t k,
                                   const SirParams& params) {
  const std::size_t n = g.node_count();
  if (k == 0 || k > n) fail(ErrorCode::InvalidArgument, "k must lie in [1, N]");
  if (ranking.size() < k) fail(ErrorCode::SizeMismatch, "ranking shorter than k");
  check_params(params);
  RankingValidation v;
  v.k = k;
  v.beta = resolve_beta(g, params);
  v.top_nodes.assign(ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(k));
  check_seeds(g, v.top_nodes);

  std::vector<NodeId> pool(n);
  for (NodeId i = 0; i < n; ++i) pool[i] = i;
  Rng rng(stream_seed(params.seed, kRandomNodesStream));
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.index(n - i)]);
  v.random_nodes.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));

  SirParams fixed = params;
  fixed.beta = v.beta;
  auto mean_single = [&](const std::vector<NodeId>& nodes) {
    double total = 0.0;
    for (NodeId s : nodes) {
      const NodeId seed[] = {s};
      const auto fractions = outbreak_trials(g, seed, v.beta, fixed, {});
      double sum = 0.0;
      for (double f : fractions) sum += f;
      total += sum / static_cast<double>(fractions.size());
    }
    return total / static_cast<double>(nodes.size());
  };
  v.top_mean = mean_single(v.top_nodes);
  v.random_mean = mean_single(v.random_nodes);
  v.ratio = v.top_mean / v.random_mean;
  return v;
}

}  // namespace noderank
