#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "zdim/quadrature.hpp"
#include "zdim/specfun.hpp"

using zdim::Complex;
using zdim::QuadratureConfig;
using zdim::TailTransform;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double tol_for(const QuadratureConfig& cfg, double value) {
  return cfg.abs_tol + cfg.rel_tol * std::fabs(value);
}
}  // namespace

TEST_CASE("integrate: exponential, gaussian and algebraic tails") {
  QuadratureConfig cfg;
  // int_0^inf e^{-x} dx = 1
  const Complex a = zdim::integrate(
      [](double x) -> Complex { return std::exp(-x); }, 0.0, kInf, cfg);
  CHECK(std::abs(a - 1.0) < 1e-10);

  // int_0^inf e^{-x^2/4} dx = sqrt(pi)   (rho(1) = 1/2)
  const Complex b = zdim::integrate(
      [](double x) -> Complex { return std::exp(-0.25 * x * x); }, 0.0, kInf, cfg);
  CHECK(std::abs(b - std::sqrt(kPi)) < 1e-10);

  // int_0^inf (1+x)^{-2} dx = 1
  const Complex c = zdim::integrate(
      [](double x) -> Complex { return std::pow(1.0 + x, -2.0); }, 0.0, kInf, cfg);
  CHECK(std::abs(c - 1.0) < 1e-9);
}

TEST_CASE("integrate: finite, whole-line and left-infinite intervals") {
  QuadratureConfig cfg;
  const Complex f = zdim::integrate(
      [](double x) -> Complex { return std::sin(x); }, 0.0, kPi, cfg);
  CHECK(std::abs(f - 2.0) < 1e-12);

  const Complex g = zdim::integrate(
      [](double x) -> Complex { return std::exp(-x * x); }, -kInf, kInf, cfg);
  CHECK(std::abs(g - std::sqrt(kPi)) < 1e-9);

  const Complex h = zdim::integrate(
      [](double x) -> Complex { return std::exp(x); }, -kInf, 0.0, cfg);
  CHECK(std::abs(h - 1.0) < 1e-10);
}

TEST_CASE("integrate: interval and config validation") {
  QuadratureConfig cfg;
  auto f = [](double) -> Complex { return 1.0; };
  CHECK_THROWS_AS(zdim::integrate(f, 1.0, 1.0, cfg), zdim::InvalidInterval);
  CHECK_THROWS_AS(zdim::integrate(f, 2.0, -1.0, cfg), zdim::InvalidInterval);
  QuadratureConfig bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(zdim::integrate(f, 0.0, 1.0, bad), zdim::InvalidArgument);
}

TEST_CASE("integrate: divergent integrand exhausts the budget") {
  QuadratureConfig cfg;
  CHECK_THROWS_AS(zdim::integrate([](double x) -> Complex { return 1.0 / x; },
                                  0.0, 1.0, cfg),
                  zdim::NonConvergent);
}

TEST_CASE("integrate: linearity on random polynomial-times-gaussian pairs") {
  QuadratureConfig cfg;
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    double cf[4], cg[4];
    for (int i = 0; i < 4; ++i) {
      cf[i] = u(rng);
      cg[i] = u(rng);
    }
    auto poly = [](const double* c, double x) {
      return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
    };
    auto f = [&](double x) -> Complex { return poly(cf, x) * std::exp(-x * x); };
    auto g = [&](double x) -> Complex { return poly(cg, x) * std::exp(-x * x); };
    const double al = u(rng), be = u(rng);
    auto combo = [&](double x) -> Complex { return al * f(x) + be * g(x); };
    const Complex lhs = zdim::integrate(combo, 0.0, kInf, cfg);
    const Complex rhs = al * zdim::integrate(f, 0.0, kInf, cfg) +
                        be * zdim::integrate(g, 0.0, kInf, cfg);
    CHECK(std::abs(lhs - rhs) < 10.0 * tol_for(cfg, std::abs(lhs)));
  }
}

TEST_CASE("integrate: both tail transforms agree on (1+x^2)^{-2}") {
  QuadratureConfig rational;
  QuadratureConfig expdecay;
  expdecay.tail_transform = TailTransform::exp_decay;
  auto f = [](double x) -> Complex { return std::pow(1.0 + x * x, -2.0); };
  const Complex a = zdim::integrate(f, 0.0, kInf, rational);
  const Complex b = zdim::integrate(f, 0.0, kInf, expdecay);
  CHECK(std::abs(a - kPi / 4.0) < 1e-9);
  CHECK(std::abs(a - b) < 10.0 * tol_for(rational, std::abs(a)));
}

TEST_CASE("contour_residue: gamma poles and an explicit Laurent series") {
  const auto g = [](Complex s) { return zdim::gamma(s); };
  const zdim::LaurentData at0 = zdim::contour_residue(g, Complex(0.0, 0.0));
  CHECK(at0.order == 1);
  CHECK(std::abs(at0.residue - 1.0) < 1e-12);

  const zdim::LaurentData at2 = zdim::contour_residue(g, Complex(-2.0, 0.0));
  CHECK(std::abs(at2.residue - 0.5) < 1e-12);

  const zdim::LaurentData expl = zdim::contour_residue(
      [](Complex s) { return 1.0 / (s - 3.0) + 7.0; }, Complex(3.0, 0.0));
  CHECK(expl.order == 1);
  CHECK(std::abs(expl.residue - 1.0) < 1e-13);
  CHECK(std::abs(expl.finite_part - 7.0) < 1e-13);
}

TEST_CASE("contour_residue: regular point has order zero") {
  const zdim::LaurentData L = zdim::contour_residue(
      [](Complex s) { return std::exp(s); }, Complex(0.5, 0.0));
  CHECK(L.order == 0);
  CHECK(L.residue == Complex(0.0, 0.0));
  CHECK(std::abs(L.finite_part - std::exp(0.5)) < 1e-12);
}

TEST_CASE("contour_residue: radius stability for gamma at 0..-3") {
  for (int m = 0; m <= 3; ++m) {
    const auto g = [](Complex s) { return zdim::gamma(s); };
    const zdim::LaurentData a =
        zdim::contour_residue(g, Complex(-m, 0.0), 0.25, 64);
    const zdim::LaurentData b =
        zdim::contour_residue(g, Complex(-m, 0.0), 0.125, 64);
    CHECK(std::abs(a.residue - b.residue) <=
          1e-6 * std::max(1.0, std::abs(a.residue)));
  }
}

TEST_CASE("contour_residue: second pole inside the circle is inconsistent") {
  // poles at s0 and s0 + 0.2; radius 0.25 encloses both, radius 0.125 one
  auto f = [](Complex s) { return 1.0 / (s * (s - 0.2)); };
  CHECK_THROWS_AS(zdim::contour_residue(f, Complex(0.0, 0.0), 0.25, 64),
                  zdim::Inconsistent);
}

TEST_CASE("contour_residue: evaluation failure maps to PoleTooClose") {
  auto f = [](Complex s) -> Complex {
    if (s.real() > 0.2) throw zdim::AtPole("synthetic");
    return 1.0 / s;
  };
  CHECK_THROWS_AS(zdim::contour_residue(f, Complex(0.0, 0.0), 0.25, 64),
                  zdim::PoleTooClose);
}

TEST_CASE("mellin_integral: gamma values") {
  QuadratureConfig cfg;
  auto h = [](double t) -> Complex { return std::exp(-t); };
  CHECK(std::abs(zdim::mellin_integral(h, Complex(2.0, 0.0), cfg) - 1.0) < 1e-10);
  CHECK(std::abs(zdim::mellin_integral(h, Complex(5.0, 0.0), cfg) -
                 0.75 * std::sqrt(kPi)) < 1e-9);
  auto ht = [](double t) -> Complex { return t * std::exp(-t); };
  CHECK(std::abs(zdim::mellin_integral(ht, Complex(2.0, 0.0), cfg) - 1.0) < 1e-9);
  CHECK_THROWS_AS(zdim::mellin_integral(h, Complex(-1.0, 0.0), cfg),
                  zdim::OutsideConvergence);
}

TEST_CASE("integrate and friends are safe to call from many threads") {
  const Complex serial = zdim::integrate(
      [](double x) -> Complex { return std::exp(-0.25 * x * x); }, 0.0, kInf);
  const Complex zserial = zdim::hurwitz_zeta(Complex(2.5, 1.0), 1.3);
  std::vector<std::future<std::pair<Complex, Complex>>> futs;
  for (int i = 0; i < 8; ++i)
    futs.push_back(std::async(std::launch::async, [] {
      const Complex a = zdim::integrate(
          [](double x) -> Complex { return std::exp(-0.25 * x * x); }, 0.0, kInf);
      const Complex b = zdim::hurwitz_zeta(Complex(2.5, 1.0), 1.3);
      return std::make_pair(a, b);
    }));
  for (auto& f : futs) {
    const auto [a, b] = f.get();
    CHECK(a == serial);
    CHECK(b == zserial);
  }
}

TEST_CASE("mellin_integral: agrees with gamma(s/2) on Re(s) in [1,10]") {
  QuadratureConfig cfg;
  auto h = [](double t) -> Complex { return std::exp(-t); };
  for (double s = 1.0; s <= 10.0 + 1e-9; s += 0.75) {
    const Complex got = zdim::mellin_integral(h, Complex(s, 0.0), cfg);
    const Complex want = zdim::gamma(Complex(0.5 * s, 0.0));
    CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
  }
}
