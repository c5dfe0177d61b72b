// SPDX-License-Identifier: Apache-2.0
// Microbenchmarks for the hot paths: integrand evaluation, exact sums,
// series enumeration, and certified quadrature.

#include <benchmark/benchmark.h>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/resurgence.hpp"
#include "seifertwrt/seifert.hpp"
#include "seifertwrt/wrt_qseries.hpp"

namespace {

using namespace swrt;

const SeifertLoop& poincare() {
  static const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
  return loop;
}

void BM_FEval(benchmark::State& state) {
  const mpfr_prec_t prec = state.range(0);
  const HPComplex y(HPReal(Rational(7, 10), prec), HPReal(Rational(3, 10), prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(F_eval(poincare(), 2, y));
  }
}
BENCHMARK(BM_FEval)->Arg(128)->Arg(256)->Arg(512);

void BM_Tau(benchmark::State& state) {
  const long K = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau(poincare(), K, 1, 256));
  }
}
BENCHMARK(BM_Tau)->Arg(25)->Arg(100);

void BM_PhiSeries(benchmark::State& state) {
  const long long cutoff = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_series(poincare(), 2, cutoff));
  }
}
BENCHMARK(BM_PhiSeries)->Arg(2000)->Arg(20000);

void BM_DirectionalSum(benchmark::State& state) {
  const HPComplex kappa(HPReal(50L, 256), HPReal(0L, 256));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        directional_sum(poincare(), 1, kappa, 0.0, 256, ResummationOptions{}));
  }
}
BENCHMARK(BM_DirectionalSum);

}  // namespace

BENCHMARK_MAIN();
