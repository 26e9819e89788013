#include <benchmark/benchmark.h>

#include "symfn/engine.hpp"
#include "symfn/exact_constants.hpp"
#include "symfn/hfun.hpp"

using namespace symfn;

namespace {

BigComplex unit_at(long num, long den, mpfr_prec_t wp) {
  mpq_class x(num, den);
  x.canonicalize();
  return BigComplex::unit(mul_q(BigReal::pi(wp) * 2, x));
}

void BM_h_eval(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  BigComplex t = unit_at(1, 7, 320);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_eval(r, t, 256));
  }
}
BENCHMARK(BM_h_eval)->Arg(3)->Arg(5)->Arg(8);

void BM_h_trig(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  BigReal x(mpq_class(1, 7), 320);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_trig(r, x, 256));
  }
}
BENCHMARK(BM_h_trig)->Arg(3)->Arg(5);

void BM_h_series(benchmark::State& state) {
  BigReal x(mpq_class(1, 7), 320);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_series(3, x, state.range(0), 128));
  }
}
BENCHMARK(BM_h_series)->Arg(256)->Arg(2048);

void BM_l_theorem23(benchmark::State& state) {
  SymmetricFunction chi = make_chi_2m(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_theorem23(chi, 3, 256));
  }
}
BENCHMARK(BM_l_theorem23)->Arg(4)->Arg(12)->Arg(24)->Arg(48);

void BM_l_half_sum(benchmark::State& state) {
  SymmetricFunction chi = make_chi_2m(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_half_sum(chi, 3, 256));
  }
}
BENCHMARK(BM_l_half_sum)->Arg(4)->Arg(12)->Arg(24)->Arg(48);

void BM_l_direct(benchmark::State& state) {
  SymmetricFunction chi = make_chi_2m(3);
  BigReal tol = BigReal::from_decimal("1e-8", 96);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_direct(chi, 3, tol, 256, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_l_direct)->Arg(1)->Arg(2);

void BM_constant_eval(benchmark::State& state) {
  const GoldenConstantEntry* entry = find_constant("L5.chi24");
  for (auto _ : state) {
    benchmark::DoNotOptimize(entry->constant.eval(state.range(0)));
  }
}
BENCHMARK(BM_constant_eval)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
