#include <benchmark/benchmark.h>

#include "symdehn/symdehn.hpp"

using namespace symdehn;

static void BM_PiProduct(benchmark::State& state) {
  const auto b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pi_product(4, 1, b));
}
BENCHMARK(BM_PiProduct)->Arg(5)->Arg(33)->Arg(129)->Arg(513);

static void BM_OracleTwoCosine(benchmark::State& state) {
  const auto q_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_two_cosine(Rational(1), Rational(2), Rational(-1), q_max));
}
BENCHMARK(BM_OracleTwoCosine)->Arg(24)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_VerdictSweep(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state)
    for (long p = 1; p <= bound; ++p)
      for (long q = 1; q <= bound; ++q)
        benchmark::DoNotOptimize(triviality_verdict(PyramidSpec::with_height_squared(4, Rational(p, q))).verdict);
}
BENCHMARK(BM_VerdictSweep)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_NormEquationClosed(benchmark::State& state) {
  const auto b_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_prop10(b_max));
}
BENCHMARK(BM_NormEquationClosed)->Arg(64)->Arg(256);

static void BM_NormEquationOracle(benchmark::State& state) {
  const auto b_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_norm_equation(b_max));
}
BENCHMARK(BM_NormEquationOracle)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_P5Check(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(p5_check().w60_is_one);
}
BENCHMARK(BM_P5Check);

static void BM_Complexity(benchmark::State& state) {
  DehnTensor t = dehn_invariant(PyramidSpec::with_v(6, Rational(1, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(complexity(t).upper);
}
BENCHMARK(BM_Complexity);
BENCHMARK_MAIN();
