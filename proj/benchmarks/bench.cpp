#include <benchmark/benchmark.h>

#include <random>

#include "sset/constructions.hpp"
#include "sset/hcnerve.hpp"
#include "sset/invariants.hpp"
#include "sset/kan.hpp"
#include "sset/parallel.hpp"

namespace {

using namespace sset;

void BM_KanReportBG(benchmark::State& state) {
  const Presentation b = bg(cyclic_group(static_cast<int>(state.range(0))), 4);
  set_thread_count(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kan_report(b, KanOptions{3}).horns_checked);
  set_thread_count(1);
}
BENCHMARK(BM_KanReportBG)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_EnumerateSimplices(benchmark::State& state) {
  const Presentation d = standard_simplex(4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplices(d, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateSimplices)->DenseRange(2, 8, 3);

void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank());
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 24);

void BM_HomologyTorusProduct(benchmark::State& state) {
  const Presentation t = product(product(sphere(1), sphere(1)), sphere(1));
  for (auto _ : state) benchmark::DoNotOptimize(homology(t, 2).group.free_rank);
}
BENCHMARK(BM_HomologyTorusProduct)->Unit(benchmark::kMillisecond);

void BM_EnumerateMaps(benchmark::State& state) {
  auto d = share(standard_simplex(2));
  auto b = share(bg(symmetric_group(3), 3));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maps(d, b).size());
}
BENCHMARK(BM_EnumerateMaps);

void BM_CoherentNerve(benchmark::State& state) {
  const SimplicialCategory c = discrete_enrichment(group_category(symmetric_group(3)));
  for (auto _ : state) benchmark::DoNotOptimize(hc_nerve(c, static_cast<int>(state.range(0))).counts());
}
BENCHMARK(BM_CoherentNerve)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
