#include <benchmark/benchmark.h>

#include "coase/cutoffs.hpp"
#include "coase/sim.hpp"
#include "coase/value.hpp"
#include "coase/verify.hpp"

namespace {

coase::ValueSurface surface(double delta) {
  return coase::ValueSurface(coase::compute_cutoffs(coase::make_params(1.0, 2.0, delta, 0.5)));
}

void BM_ComputeCutoffs(benchmark::State& state) {
  const double delta = static_cast<double>(state.range(0)) / 100.0;
  const auto p = coase::make_params(1.0, 2.0, delta, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(coase::compute_cutoffs(p));
}
BENCHMARK(BM_ComputeCutoffs)->Arg(80)->Arg(95)->Arg(99);

void BM_EvalR(benchmark::State& state) {
  const auto s = surface(0.95);
  const coase::Belief mp(0.999), mu0(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(coase::eval_R(s, mp, mu0));
}
BENCHMARK(BM_EvalR);

void BM_DeviationScan(benchmark::State& state) {
  const auto s = surface(0.8);
  const coase::ScanOptions opts{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(coase::deviation_scan(s, coase::Belief(0.85), opts));
}
BENCHMARK(BM_DeviationScan)->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto s = surface(0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coase::monte_carlo(s, coase::Belief(0.97), coase::TypeDraw::Prior, 10000, 7));
  }
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
