#include <benchmark/benchmark.h>

#include "rhombus/cubillage.hpp"
#include "rhombus/kernels.hpp"

using namespace rhombus;
using kernels::Exec;

static void BM_BfsTilings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bfs_tilings(n, exec));
}
BENCHMARK(BM_BfsTilings)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_tilings(6, exec));
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MedianScan(benchmark::State& state) {
  const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
  // A maximal chain is a CSD, so the scan never stops early.
  const SuperDomain d(8, chain_from_linear(lexicographic_order(8)));
  const auto sets = d.inversion_sets();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_non_tiling_median(sets, exec));
}
BENCHMARK(BM_MedianScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
