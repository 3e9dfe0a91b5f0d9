#include "ncp/deformed_cube.hpp"
#include "ncp/exact.hpp"
#include "ncp/gale.hpp"
#include "ncp/hull.hpp"

#include <benchmark/benchmark.h>

using namespace ncp;

static void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 4);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(4, 12, 4);

static void BM_FacetsFromVrep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const VPolytope v = projected_cube(n, 4, choose_epsilon(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(facets_from_vrep(v));
}
BENCHMARK(BM_FacetsFromVrep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_FacetsGale(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(facets_gale(n, 4));
}
BENCHMARK(BM_FacetsGale)->DenseRange(6, 14, 4);

BENCHMARK_MAIN();
