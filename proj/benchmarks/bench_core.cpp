#include <benchmark/benchmark.h>

#include "cuspgroup/classlattice.hpp"
#include "cuspgroup/eisq.hpp"

using namespace cuspgroup;

static void BM_ClassOrder(benchmark::State& state) {
  const auto datum = EisensteinDatum::make(state.range(0), 1, 1);
  const auto c = build_c_divisor(datum);
  for (auto _ : state) benchmark::DoNotOptimize(class_order(c));
}
BENCHMARK(BM_ClassOrder)->Arg(32)->Arg(120)->Arg(289)->Arg(720);

static void BM_LambdaInverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambda_inverse(state.range(0)));
}
BENCHMARK(BM_LambdaInverse)->Arg(30)->Arg(120)->Arg(720);

static void BM_SolveLambda(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto a = QVector::from_divisor(build_c_divisor(EisensteinDatum::make(n, 5, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lambda(n, a));
}
BENCHMARK(BM_SolveLambda)->Arg(30)->Arg(120)->Arg(720);

static void BM_HeckeDelta(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto c = build_c_divisor(EisensteinDatum::make(n, 5, 1));
  for (auto _ : state) benchmark::DoNotOptimize(hecke_delta(c, 2));
}
BENCHMARK(BM_HeckeDelta)->Arg(30)->Arg(120)->Arg(720);

static void BM_BuildQexp(benchmark::State& state) {
  const auto datum = EisensteinDatum::make(90, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_qexp(datum, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildQexp)->Arg(60)->Arg(240)->Arg(1000);
BENCHMARK_MAIN();
