#include <benchmark/benchmark.h>

#include "angulate/continuum.hpp"
#include "angulate/map_metric.hpp"
#include "angulate/sampler.hpp"

using namespace angulate;

namespace {

void BM_SampleFreeMobile(benchmark::State& state) {
  RngStream rng(1, 0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_free_mobile(2, n, rng));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleFreeMobile)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMicrosecond);

void BM_SampleRootedMobile(benchmark::State& state) {
  RngStream rng(2, 0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_rooted_mobile(3, n, rng));
}
BENCHMARK(BM_SampleRootedMobile)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_BuildPointedMap(benchmark::State& state) {
  RngStream rng(3, 0);
  const Mobile mob = sample_free_mobile(2, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_pointed_map(mob));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildPointedMap)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMicrosecond);

void BM_Bfs(benchmark::State& state) {
  RngStream rng(4, 0);
  const Mobile mob = sample_free_mobile(2, static_cast<int>(state.range(0)), rng);
  const PlanarMap map = build_pointed_map(mob).map;
  for (auto _ : state) benchmark::DoNotOptimize(bfs(map, kRootVertex));
  state.SetItemsProcessed(state.iterations() * map.vertex_count());
}
BENCHMARK(BM_Bfs)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMicrosecond);

void BM_ContourBound(benchmark::State& state) {
  RngStream rng(5, 0);
  const ContourPair c = contour(sample_free_mobile(2, 1 << 16, rng));
  const ContourBound bound(c.labels);
  std::size_t i = 0;
  for (auto _ : state) {
    i = (i * 2654435761u + 1) % c.labels.size();
    benchmark::DoNotOptimize(bound(i, (i * 7) % c.labels.size()));
  }
}
BENCHMARK(BM_ContourBound);

void BM_GridClosure(benchmark::State& state) {
  RngStream rng(6, 0);
  const LabeledExcursion x = sample_labeled_excursion(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(grid_dstar(x));
}
BENCHMARK(BM_GridClosure)->Arg(64)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
