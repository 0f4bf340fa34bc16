#include <benchmark/benchmark.h>

#include "filtra/module_realization.hpp"
#include "filtra/parse.hpp"
#include "filtra/return_function.hpp"

using namespace filtra;

static void BM_AlgebraReturnProbe(benchmark::State& state) {
  const long e = state.range(0);
  MultiIndex alpha{static_cast<std::uint32_t>(e)};
  const WeylElement a = WeylElement::monomial(1, alpha, MultiIndex{0});
  for (auto _ : state) benchmark::DoNotOptimize(element_return_index_algebra(a, e));
}
BENCHMARK(BM_AlgebraReturnProbe)->Arg(2)->Arg(4);

static void BM_IdealPiece(benchmark::State& state) {
  const auto g = parse_weyl("x1^2*d1 - x1 + 2", 1);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_piece_dimension(1, {g}, 8, 12));
}
BENCHMARK(BM_IdealPiece);

static void BM_ModuleDims(benchmark::State& state) {
  const auto m = polynomial_module(2);
  for (auto _ : state) benchmark::DoNotOptimize(module_dimension_sequence(m, 10));
}
BENCHMARK(BM_ModuleDims);
