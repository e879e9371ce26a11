#include <random>

#include <benchmark/benchmark.h>

#include "c2hom/box.hpp"
#include "c2hom/models.hpp"
#include "c2hom/smith.hpp"

using namespace c2hom;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_SmithForm(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(a));
}
BENCHMARK(BM_SmithForm)->Arg(8)->Arg(16)->Arg(32);

void BM_BoxInducedFixedPoint(benchmark::State& state) {
  const BaseRing z = BaseRing::integers();
  const auto n = static_cast<std::size_t>(state.range(0));
  const MackeyFunctor a = induced(FgModule::free(z, n));
  const MackeyFunctor b = fixed_point(FgModule::free(z, 2), Matrix{{0, 1}, {1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(box(a, b));
}
BENCHMARK(BM_BoxInducedFixedPoint)->Arg(1)->Arg(2)->Arg(4);

void BM_PerfectoidSlices(benchmark::State& state) {
  const BaseRing f3 = BaseRing::integers_mod(3);
  const int nmax = static_cast<int>(state.range(0));
  const MackeyComplex m = thr_perfectoid_model(f3, nmax);
  for (auto _ : state) benchmark::DoNotOptimize(rho_table(m, {-2, 2 * nmax + 1}));
}
BENCHMARK(BM_PerfectoidSlices)->Arg(2)->Arg(4)->Arg(6);

void BM_FreeResolution(benchmark::State& state) {
  const BaseRing z = BaseRing::integers();
  const MackeyComplex a = concentrated(constant(FgModule::cyclic(z, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreeResolution)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
