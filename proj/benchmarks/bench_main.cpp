#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "zdim/product.hpp"
#include "zdim/regularization.hpp"
#include "zdim/specfun.hpp"
#include "zdim/ztriple.hpp"

namespace {

using zdim::Complex;
constexpr double kInf = std::numeric_limits<double>::infinity();

void BM_IntegrateGaussian(benchmark::State& state) {
  for (auto _ : state) {
    auto v = zdim::integrate(
        [](double x) -> Complex { return std::exp(-0.25 * x * x); }, 0.0, kInf);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IntegrateGaussian);

void BM_IntegrateAlgebraicTail(benchmark::State& state) {
  // the slow-tail zeta integrand at z = 6, s = z + 1/2
  const double rho2 = std::pow(zdim::rho(zdim::DimensionParameter(6.0)), 2.0);
  for (auto _ : state) {
    auto v = zdim::integrate(
        [rho2](double x) -> Complex {
          return std::pow(1.0 + rho2 * std::cbrt(x * x), -3.25);
        },
        0.0, kInf);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IntegrateAlgebraicTail);

void BM_ZetaClosed(benchmark::State& state) {
  const zdim::DimensionParameter z(2.0);
  for (auto _ : state) {
    auto v = zdim::zeta_closed(z, Complex(4.5, 0.3));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ZetaClosed);

void BM_HurwitzZeta(benchmark::State& state) {
  for (auto _ : state) {
    auto v = zdim::hurwitz_zeta(Complex(2.5, 1.0), 1.3);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_HurwitzZeta);

void BM_ContourResidueGamma(benchmark::State& state) {
  for (auto _ : state) {
    auto v = zdim::contour_residue([](Complex s) { return zdim::gamma(s); },
                                   Complex(0.0, 0.0));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ContourResidueGamma);

void BM_CircleHeatSmallTime(benchmark::State& state) {
  const zdim::DiscreteTriple circle = zdim::circle_triple();
  for (auto _ : state) {
    auto v = zdim::heat_trace(circle, 1e-8);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CircleHeatSmallTime);

void BM_MatrixProduct8x8(benchmark::State& state) {
  std::mt19937_64 rng(99);
  const zdim::MatrixTriple a = zdim::random_graded_triple(rng, 4);
  const zdim::MatrixTriple b = zdim::random_graded_triple(rng, 4);
  for (auto _ : state) {
    auto p = zdim::matrix_product(a, b);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_MatrixProduct8x8);

}  // namespace

BENCHMARK_MAIN();
