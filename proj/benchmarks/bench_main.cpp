#include <benchmark/benchmark.h>

#include <vector>

#include "noderank/centrality.hpp"
#include "noderank/generate.hpp"
#include "noderank/influence.hpp"
#include "noderank/metrics.hpp"
#include "noderank/propagation.hpp"
#include "noderank/robustness.hpp"

namespace {

using namespace noderank;

Graph scale_free(std::int64_t n) {
  return generate({GraphModel::ScaleFree, static_cast<std::size_t>(n), static_cast<std::size_t>(n) * 5 / 2, 42});
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scale_free(state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Generate)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_KShell(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_shell(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KShell)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);

void BM_Betweenness(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_raw(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Eigenvector(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvector_centrality_with_retry(g));
}
BENCHMARK(BM_Eigenvector)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PathStats(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_stats(g));
}
BENCHMARK(BM_PathStats)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Gsm(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  const auto shells = k_shell(g);
  for (auto _ : state) benchmark::DoNotOptimize(gsm_scores(g, shells));
}
BENCHMARK(BM_Gsm)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_DematelTotal(benchmark::State& state) {
  const DenseMatrix direct = dematel_direct(scale_free(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dematel_total(direct));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DematelTotal)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_RandomRemoval(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  RemovalPlan plan;
  plan.trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(run_removal(g, plan));
}
BENCHMARK(BM_RandomRemoval)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Sir(benchmark::State& state) {
  const Graph g = scale_free(state.range(0));
  const std::vector<NodeId> seeds{0};
  SirParams params;
  params.trials = 100;
  for (auto _ : state) benchmark::DoNotOptimize(sir_simulate(g, seeds, params));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(params.trials));
}
BENCHMARK(BM_Sir)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
