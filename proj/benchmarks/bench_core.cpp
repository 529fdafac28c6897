#include "dedekind/coalgebra.hpp"
#include "dedekind/corpus.hpp"
#include "dedekind/link_homology.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dedekind;

static void BM_SmithInvariants(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith(a).invariants);
}
BENCHMARK(BM_SmithInvariants)->Arg(8)->Arg(16)->Arg(32);

static void BM_SmithTransforms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith(a, true).u);
}
BENCHMARK(BM_SmithTransforms)->Arg(4)->Arg(8)->Arg(12);

static void BM_TensorPower(benchmark::State& state) {
  const FrobeniusAlgebra alg = example_zsqrtm5(1, 1);
  for (auto _ : state) {
    TensorPowers spaces(alg);
    benchmark::DoNotOptimize(spaces.power(static_cast<std::size_t>(state.range(0))).rank_z);
  }
}
BENCHMARK(BM_TensorPower)->DenseRange(1, 4);

static void BM_Validate(benchmark::State& state) {
  const FrobeniusData data = standard_algebra("example");
  for (auto _ : state) benchmark::DoNotOptimize(validate(data).accepted);
}
BENCHMARK(BM_Validate);

static void BM_Homology(benchmark::State& state, const char* diagram_name, const char* algebra_name) {
  const TensorPowers spaces(build_algebra(standard_algebra(algebra_name)));
  const PDCode pd = diagram(diagram_name);
  for (auto _ : state) benchmark::DoNotOptimize(homology_integral(build_complex(pd, spaces)).total_k_dim);
}
BENCHMARK_CAPTURE(BM_Homology, trefoil_eps0, "trefoil", "eps0");
BENCHMARK_CAPTURE(BM_Homology, trefoil_example, "trefoil", "example");
BENCHMARK_CAPTURE(BM_Homology, figure8_example, "figure8", "example");
BENCHMARK_MAIN();
