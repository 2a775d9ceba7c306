#include <benchmark/benchmark.h>

#include "classpoly/adjacency.hpp"
#include "classpoly/csp.hpp"
#include "classpoly/graph.hpp"
#include "classpoly/group.hpp"

using namespace classpoly;

namespace {

void subset_table_method(benchmark::State& state, SubsetMethod method) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  EnumerationOptions options;
  options.method = method;
  for (auto _ : state) benchmark::DoNotOptimize(subset_table(g, options));
  state.SetComplexityN(state.range(0));
}

void BM_SubsetTableGray(benchmark::State& state) { subset_table_method(state, SubsetMethod::kGrayCode); }
void BM_SubsetTableReference(benchmark::State& state) { subset_table_method(state, SubsetMethod::kReference); }

void BM_ComputeF(benchmark::State& state) {
  Graph g = complete_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_F(g));
}

void BM_RankHistogram(benchmark::State& state) {
  Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_class_histogram(g, 3));
}

void BM_BruteForce(benchmark::State& state, OrbitMode mode) {
  Graph g = path(static_cast<int>(state.range(0)));
  BruteForceOptions options;
  options.mode = mode;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_class_histogram(g, GroupRing::field(2), options));
}

}  // namespace

BENCHMARK(BM_SubsetTableGray)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetTableReference)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComputeF)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankHistogram)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BruteForce, generators, OrbitMode::kGenerators)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BruteForce, all_elements, OrbitMode::kAllElements)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
