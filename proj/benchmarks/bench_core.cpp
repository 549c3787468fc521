#include <benchmark/benchmark.h>

#include "hesskum/invariant.hpp"
#include "hesskum/kummer.hpp"
#include "hesskum/pentahedral.hpp"
#include "hesskum/resultant.hpp"

using namespace hesskum;

static void BM_EnumerateWeberHexads(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weber_hexads());
}
BENCHMARK(BM_EnumerateWeberHexads);

static void BM_PolynomialPower(benchmark::State& state) {
  MultiPoly s(x_ring());
  for (std::size_t i = 0; i < 4; ++i) s += MultiPoly::var(x_ring(), i);
  for (auto _ : state) benchmark::DoNotOptimize(s.pow(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PolynomialPower)->Arg(4)->Arg(8)->Arg(12);

static void BM_HessianIdentity(benchmark::State& state) {
  PentahedralData d({Rational(2), Rational(3, 2), Rational(-5), Rational(7, 3), Rational(-1)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_hessian_identity(d));
}
BENCHMARK(BM_HessianIdentity);

static void BM_VanishingQuartics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_quartics_dimension());
}
BENCHMARK(BM_VanishingQuartics);

// The full symbolic pipeline behind the cubic condition (the cached
// derive_condition() would only measure a lookup).
static void BM_ResultantDerivation(benchmark::State& state) {
  for (auto _ : state) {
    const RingPtr& r = st_ring();
    MultiPoly res = resultant(t_quadratic_symbolic("s"), t_quadratic_symbolic("sb"), "alpha");
    MultiPoly sym = rewrite_symmetric_in_s(std::move(res));
    MultiPoly m3 = MultiPoly::var(r, "mu3"), m4 = MultiPoly::var(r, "mu4");
    sym = sym.substitute(r->require("e1"), (m3 + m4) * Rational(2));
    sym = sym.substitute(r->require("e2"), (m3 - m4) * (m3 - m4));
    benchmark::DoNotOptimize(sym);
  }
}
BENCHMARK(BM_ResultantDerivation);

BENCHMARK_MAIN();
