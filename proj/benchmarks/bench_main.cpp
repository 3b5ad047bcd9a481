#include <benchmark/benchmark.h>

#include "sst/corpus.hpp"
#include "sst/linalg.hpp"
#include "sst/shifted.hpp"
#include "sst/spanning_trees.hpp"
#include "sst/weighted.hpp"

using namespace sst;

static void BM_SmithNormalForm(benchmark::State& state) {
  auto c = corpus::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  auto m = boundary_matrix(c, 2).m;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(5, 8);

static void BM_EnumerateTrees(benchmark::State& state) {
  auto c = corpus::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ssts(c, 2, kDefaultSubsetCap, false).tau);
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_ReducedLaplacian(benchmark::State& state) {
  auto c = corpus::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tau_via_reduced_laplacian(c, 2));
}
BENCHMARK(BM_ReducedLaplacian)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_WeightedTauSymbolic(benchmark::State& state) {
  auto c = corpus::bipyramid();
  const auto s = state.range(0) ? Scheme::Fine : Scheme::Coarse;
  for (auto _ : state) benchmark::DoNotOptimize(weighted_tau(c, s));
}
BENCHMARK(BM_WeightedTauSymbolic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ShiftedClosedForm(benchmark::State& state) {
  auto c = corpus::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(shifted_tau_fine(c));
}
BENCHMARK(BM_ShiftedClosedForm)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ShiftedSpectrum(benchmark::State& state) {
  auto c = corpus::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(shifted_spectrum(c, 2));
}
BENCHMARK(BM_ShiftedSpectrum)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_ShiftedCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus::shifted_complexes(static_cast<int>(state.range(0)), 2).size());
}
BENCHMARK(BM_ShiftedCorpus)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
