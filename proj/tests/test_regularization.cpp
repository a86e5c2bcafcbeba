#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "zdim/regularization.hpp"
#include "zdim/specfun.hpp"

using zdim::Complex;
using zdim::DimensionParameter;
using zdim::GaugeScalar;
using zdim::PropagatorSpec;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286;
}  // namespace

TEST_CASE("schwinger_check: explicit values and the random family") {
  CHECK(std::abs(zdim::schwinger_check(PropagatorSpec{2, 1.0}, 0.0) - 1.0) < 1e-10);
  CHECK(std::abs(zdim::schwinger_check(PropagatorSpec{1, 1.0}, 1.0) - 0.5) < 1e-10);
  CHECK(std::abs(zdim::schwinger_check(PropagatorSpec{2, 2.0}, 0.0) - 1.0 / 16.0) <
        1e-11);
  std::mt19937_64 rng(1879);
  std::uniform_int_distribution<int> un(1, 4);
  std::uniform_real_distribution<double> um(0.5, 3.0), upp(0.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const PropagatorSpec spec{un(rng), um(rng)};
    const double p = upp(rng);
    const double want = std::pow(p * p + spec.m * spec.m, -spec.n);
    CHECK(std::abs(zdim::schwinger_check(spec, p) - want) <= 1e-10 * want);
  }
  CHECK_THROWS_AS(zdim::schwinger_check(PropagatorSpec{0, 1.0}, 0.0),
                  zdim::InvalidArgument);
}

TEST_CASE("dimreg propagator: closed values, poles and the residue at z=4") {
  CHECK(std::abs(zdim::dimreg_propagator_closed(PropagatorSpec{2, 1.0},
                                                DimensionParameter(2.0)) -
                 kPi) < 1e-13);
  CHECK(std::abs(zdim::dimreg_propagator_closed(PropagatorSpec{1, 1.0},
                                                DimensionParameter(1.0)) -
                 kPi) < 1e-12);
  CHECK_THROWS_AS(zdim::dimreg_propagator_closed(PropagatorSpec{2, 1.0},
                                                 DimensionParameter(4.0)),
                  zdim::AtPole);
  const zdim::LaurentData L = zdim::contour_residue(
      [](Complex z) { return zdim::dimreg_propagator_value(PropagatorSpec{2, 1.0}, z); },
      Complex(4.0, 0.0));
  CHECK(std::abs(L.residue + 2.0 * kPi * kPi) < 1e-7);
}

TEST_CASE("dimreg propagator: numeric equals closed where both exist") {
  for (int n : {1, 2, 3}) {
    for (double m : {0.5, 1.0, 2.0}) {
      for (double z : {0.5, 1.0, 2.0, 3.0}) {
        if (!(z < 2.0 * n)) continue;
        const PropagatorSpec spec{n, m};
        const DimensionParameter dz(z);
        const double got = zdim::dimreg_propagator_numeric(spec, dz);
        const Complex want = zdim::dimreg_propagator_closed(spec, dz);
        CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
      }
    }
  }
  // close to the convergence edge: n = 2, z = 3.5
  {
    const PropagatorSpec spec{2, 1.0};
    const DimensionParameter dz(3.5);
    const double got = zdim::dimreg_propagator_numeric(spec, dz);
    const Complex want = zdim::dimreg_propagator_closed(spec, dz);
    CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
  }
  CHECK_THROWS_AS(zdim::dimreg_propagator_numeric(PropagatorSpec{1, 1.0},
                                                  DimensionParameter(2.5)),
                  zdim::OutsideConvergence);
}

TEST_CASE("dimreg propagator: mass scaling and variable-change covariance") {
  // closed(n,m,z) = m^{z-2n} closed(n,1,z)
  for (int n : {1, 2}) {
    for (double m : {0.5, 2.0}) {
      for (double z : {0.7, 1.9, 3.1}) {
        const Complex a =
            zdim::dimreg_propagator_value(PropagatorSpec{n, m}, Complex(z, 0.0));
        const Complex b = std::pow(m, z - 2.0 * n) *
                          zdim::dimreg_propagator_value(PropagatorSpec{n, 1.0},
                                                        Complex(z, 0.0));
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
      }
    }
  }
  // residue in z at z = 2n and residue in w at w = 0 (z = 2n - w) are negatives
  const PropagatorSpec spec{2, 1.0};
  const zdim::LaurentData in_z = zdim::contour_residue(
      [&spec](Complex z) { return zdim::dimreg_propagator_value(spec, z); },
      Complex(4.0, 0.0));
  const zdim::LaurentData in_w = zdim::contour_residue(
      [&spec](Complex w) { return zdim::dimreg_propagator_value(spec, 4.0 - w); },
      Complex(0.0, 0.0));
  CHECK(std::abs(in_z.residue + in_w.residue) < 1e-8);
  CHECK(std::abs(in_w.residue - 2.0 * kPi * kPi) < 1e-7);
}

TEST_CASE("renormalize: gamma at 0, dimreg in w, and an entire point") {
  // Gamma at 0: residue 1, finite part -EulerGamma
  const zdim::MeromorphicFn gfn{[](Complex s) { return zdim::gamma(s); },
                                {Complex(0.0, 0.0)}};
  const zdim::RegularizationResult rg = zdim::renormalize(gfn, Complex(0.0, 0.0));
  CHECK(rg.laurent.order == 1);
  CHECK(std::abs(rg.laurent.residue - 1.0) < 1e-12);
  CHECK(std::abs(rg.renormalized + kEulerGamma) < 1e-9);
  // (Gamma(s) - 1/s) sampling oracle for the finite part
  const double sampled = (zdim::gamma(Complex(1e-4, 0.0)) - 1e4).real();
  CHECK(std::abs(rg.renormalized.real() - sampled) < 1e-3);

  // dimreg in the regulator w (z = 4 - w): residue flips sign to +2 pi^2
  const PropagatorSpec spec{2, 1.0};
  const zdim::MeromorphicFn wfn{
      [&spec](Complex w) { return zdim::dimreg_propagator_value(spec, 4.0 - w); },
      {Complex(0.0, 0.0)}};
  const zdim::RegularizationResult rw = zdim::renormalize(wfn, Complex(0.0, 0.0));
  CHECK(std::abs(rw.laurent.residue - 2.0 * kPi * kPi) < 1e-7);
  CHECK(rw.renormalized == rw.laurent.finite_part);

  // entire point: order 0 and renormalized = value
  const zdim::MeromorphicFn efn{
      [&spec](Complex z) { return zdim::dimreg_propagator_value(spec, z); }, {}};
  const zdim::RegularizationResult re = zdim::renormalize(efn, Complex(2.0, 0.0));
  CHECK(re.laurent.order == 0);
  CHECK(std::abs(re.renormalized - kPi) < 1e-10);
}

TEST_CASE("renormalize: recovers planted Laurent data") {
  std::mt19937_64 rng(5040);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 10; ++i) {
    const Complex c(u(rng), u(rng)), d(u(rng), u(rng)), e(u(rng), u(rng));
    const Complex s0(0.7, 0.3);
    const zdim::MeromorphicFn fn{
        [=](Complex s) { return c / (s - s0) + d + e * (s - s0); }, {s0}};
    const zdim::RegularizationResult r = zdim::renormalize(fn, s0);
    CHECK(std::abs(r.laurent.residue - c) < 1e-9 * std::max(1.0, std::abs(c)));
    CHECK(std::abs(r.renormalized - d) < 1e-9 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("zeta_reg_gamma: quadrature matches Gamma, residue 1 at 0") {
  CHECK(std::abs(zdim::zeta_reg_gamma(Complex(1.0, 0.0)) - 1.0) < 1e-10);
  CHECK(std::abs(zdim::zeta_reg_gamma(Complex(0.5, 0.0)) - std::sqrt(kPi)) < 1e-9);
  for (double s = 0.5; s <= 5.0; s += 0.75)
    CHECK(std::abs(zdim::zeta_reg_gamma(Complex(s, 0.0)) -
                   zdim::gamma(Complex(s, 0.0))) < 1e-9);
  // continuation path below the quadrature region
  CHECK(std::abs(zdim::zeta_reg_gamma(Complex(-0.5, 0.0)) -
                 zdim::gamma(Complex(-0.5, 0.0))) < 1e-13);
  const zdim::LaurentData L = zdim::contour_residue(
      [](Complex s) { return zdim::zeta_reg_gamma(s, {}); }, Complex(0.0, 0.0));
  CHECK(std::abs(L.residue - 1.0) < 1e-9);
}

TEST_CASE("nc_integral: shifted residues on the positive integer spectrum") {
  const zdim::DiscreteTriple base = zdim::positive_integer_triple();
  CHECK(std::abs(zdim::nc_integral(base, GaugeScalar(0.3), 1) - 0.3) < 1e-12);
  CHECK(std::abs(zdim::nc_integral(base, GaugeScalar(0.3), 2)) < 1e-12);
  CHECK(zdim::nc_integral(base, GaugeScalar(0.0), 1) == 0.0);
  // circle triple has negative eigenvalues: unsupported
  CHECK_THROWS_AS(zdim::nc_integral(zdim::circle_triple(), GaugeScalar(0.3), 1),
                  zdim::UnsupportedSpectrum);
  // resolvent-convention handle is not a modulus zeta
  CHECK_THROWS_AS(zdim::nc_integral(zdim::point_triple(), GaugeScalar(0.3), 1),
                  zdim::UnsupportedSpectrum);
  CHECK_THROWS_AS(GaugeScalar(1.0), zdim::InvalidArgument);
}

TEST_CASE("spectral_action_check: lhs = rhs = -a") {
  const zdim::DiscreteTriple base = zdim::positive_integer_triple();
  const zdim::ActionPair p = zdim::spectral_action_check(base, GaugeScalar(0.3));
  CHECK(std::abs(p.lhs + 0.3) < 1e-12);
  CHECK(std::abs(p.lhs - p.rhs) < 1e-9);
  const zdim::ActionPair q = zdim::spectral_action_check(base, GaugeScalar(-0.5));
  CHECK(std::abs(q.lhs - 0.5) < 1e-12);
  CHECK(std::abs(q.lhs - q.rhs) < 1e-9);
  const zdim::ActionPair r = zdim::spectral_action_check(base, GaugeScalar(0.0));
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs == 0.0);
  for (int i = 0; i < 20; ++i) {
    const double a = -0.9 + 1.8 * (i + 0.5) / 20.0;
    const zdim::ActionPair pr = zdim::spectral_action_check(base, GaugeScalar(a));
    CHECK(std::abs(pr.lhs - pr.rhs) <= 1e-9);
    CHECK(std::abs(pr.lhs + a) < 1e-12);
  }
}

TEST_CASE("dimreg_vs_ncintegral: the sign law") {
  const zdim::DiscreteTriple base = zdim::positive_integer_triple();
  const zdim::ResiduePair p1 =
      zdim::dimreg_vs_ncintegral(base, GaugeScalar(0.5), 1);
  CHECK(std::abs(p1.res_z0 + 0.5) < 1e-10);
  CHECK(std::abs(p1.res_z0 - p1.minus_nc) < 1e-8);
  const zdim::ResiduePair p2 =
      zdim::dimreg_vs_ncintegral(base, GaugeScalar(0.5), 2);
  CHECK(std::abs(p2.res_z0) < 1e-10);
  for (int n : {1, 2, 3})
    for (double a : {0.25, 0.5}) {
      const zdim::ResiduePair pr = zdim::dimreg_vs_ncintegral(base, GaugeScalar(a), n);
      CHECK(std::abs(pr.res_z0 - pr.minus_nc) <= 1e-8);
    }
  const zdim::ResiduePair z =
      zdim::dimreg_vs_ncintegral(base, GaugeScalar(0.0), 2);
  CHECK(z.res_z0 == 0.0);
  CHECK(z.minus_nc == 0.0);
}
