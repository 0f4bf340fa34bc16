#include <benchmark/benchmark.h>

#include "filtra/growth.hpp"
#include "filtra/parse.hpp"
#include "filtra/poisson.hpp"
#include "filtra/sampling.hpp"

using namespace filtra;

static void BM_WeylMulSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler sampler(1);
  const WeylElement u = sampler.sparse_weyl(n, 4);
  const WeylElement v = sampler.sparse_weyl(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_WeylMulSparse)->Arg(1)->Arg(2)->Arg(3);

static void BM_WeylMulLargeOperand(benchmark::State& state) {
  Sampler sampler(2);
  const WeylElement u = sampler.sparse_weyl(2, 4);
  const WeylElement v = sampler.sparse_weyl(2, 4);
  const WeylElement w = sampler.sparse_weyl(2, 4);
  const WeylElement uv = u * v;
  for (auto _ : state) benchmark::DoNotOptimize(uv * w);
}
BENCHMARK(BM_WeylMulLargeOperand);

static void BM_ApplyToPolynomial(benchmark::State& state) {
  Sampler sampler(3);
  const WeylElement u = sampler.sparse_weyl(2, 4);
  const Polynomial p = sampler.sparse_polynomial(2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(u.apply(p));
}
BENCHMARK(BM_ApplyToPolynomial);

static void BM_PoissonBracket(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  Sampler sampler(4);
  const Polynomial f = sampler.sparse_polynomial(vars, 3);
  const Polynomial g = sampler.sparse_polynomial(vars, 3);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(f, g));
}
BENCHMARK(BM_PoissonBracket)->Arg(2)->Arg(4);

static void BM_GrowthFit(benchmark::State& state) {
  std::vector<Integer> seq;
  for (long i = 0; i < 24; ++i) seq.push_back(binomial(static_cast<unsigned long>(i + 4), 4));
  for (auto _ : state) benchmark::DoNotOptimize(fit_quasi_polynomial(seq, 1));
}
BENCHMARK(BM_GrowthFit);

BENCHMARK_MAIN();
