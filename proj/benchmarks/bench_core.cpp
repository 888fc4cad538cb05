#include <benchmark/benchmark.h>

#include <algorithm>
#include <numbers>

#include "fbh/automorphism.hpp"
#include "fbh/geodesic.hpp"
#include "fbh/kobayashi.hpp"
#include "fbh/rootsolve.hpp"
#include "fbh/schwarz.hpp"
#include "fbh/verify.hpp"

using namespace fbh;

static void BM_SolveBeta(benchmark::State& state) {
  double b = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootsolve::solve_beta(b));
    b = b < 0.9 ? b + 0.01 : 0.05;
  }
}
BENCHMARK(BM_SolveBeta);

static void BM_AlphaRoots(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootsolve::solve_alpha_roots(0.5, 1.5));
  }
}
BENCHMARK(BM_AlphaRoots);

static void BM_MetricNormal(benchmark::State& state) {
  // Arg 0: v-small, 1: two alpha roots.
  const Complex y = state.range(0) == 0 ? Complex(0.5, 0.0) : Complex(1.5, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_normal(0.5, 1.0, y));
  }
}
BENCHMARK(BM_MetricNormal)->Arg(0)->Arg(1);

static void BM_MetricAt(benchmark::State& state) {
  const Point p = Point::d11(Complex(0.8, -0.3), Complex(0.2, 0.1));
  const TangentVector v = TangentVector::d11(1.0, Complex(0.4, 0.9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric(p, v));
  }
}
BENCHMARK(BM_MetricAt);

static void BM_AutomorphismJacobian(benchmark::State& state) {
  const DomainSig sig{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Rng rng(1);
  const Automorphism a = random_automorphism(sig, rng);
  const Point p = verify::sample_interior(sig, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.jacobian(p));
  }
}
BENCHMARK(BM_AutomorphismJacobian)->Args({1, 1})->Args({2, 3})->Args({8, 4});

static void BM_GeodesicTrace(benchmark::State& state) {
  const geodesic::GeodesicParams params = geodesic::sample_admissible(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double worst = 0.0;
    for (int k = 0; k < 256; ++k) {
      worst = std::max(worst, geodesic::boundary_residual(params, 2.0 * std::numbers::pi * k / 256.0));
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_GeodesicTrace)->Arg(1)->Arg(3);

static void BM_SchwarzAudit(benchmark::State& state) {
  const auto maps = schwarz::builtin_examples({2, 3});
  for (auto _ : state) {
    for (const auto& m : maps) benchmark::DoNotOptimize(schwarz::audit(m));
  }
}
BENCHMARK(BM_SchwarzAudit);

static void BM_DominanceSuite(benchmark::State& state) {
  verify::SuiteOptions opts;
  opts.trials = 100;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::check_dominance_attainment(opts));
  }
}
BENCHMARK(BM_DominanceSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
