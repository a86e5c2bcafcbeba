#include "zdim/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "zdim/product.hpp"
#include "zdim/regularization.hpp"
#include "zdim/specfun.hpp"
#include "zdim/triples.hpp"
#include "zdim/ztriple.hpp"

namespace zdim::verify {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kZGrid = {0.5, 1.0, 2.0, 3.0, 4.0, 6.0};
const std::vector<double> kLamGrid = {0.25, 1.0, kPi, 10.0};

CriterionResult make(int id, std::string name, std::string target,
                     double computed, double tol) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.target = std::move(target);
  r.computed = computed;
  r.tolerance = tol;
  r.pass = std::isfinite(computed) && computed <= tol;
  return r;
}

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

// 1. quadrature heat trace of T_z vs pi^{z/2} lambda^{-z/2}
CriterionResult criterion1() {
  double worst = 0.0;
  for (double z : kZGrid) {
    const DimensionParameter dz(z);
    const MultiplicationTriple t = tz_triple(dz);
    for (double lam : kLamGrid)
      worst = std::max(worst, rel(heat_trace(t, lam), heat_trace_closed(dz, lam)));
  }
  return make(1, "heat trace law", "quadrature vs pi^{z/2} lam^{-z/2}, 6x4 grid",
              worst, 1e-8);
}

// 2. quadrature zeta vs pi^{z/2} Gamma((s-z)/2)/Gamma(s/2)
CriterionResult criterion2() {
  double worst = 0.0;
  for (double z : kZGrid) {
    const DimensionParameter dz(z);
    const MultiplicationTriple t = tz_triple(dz);
    for (double off : {0.5, 1.0, 2.0, 5.0}) {
      const Complex s(z + off, 0.0);
      worst = std::max(worst, rel(zeta_trace(t, s), zeta_closed(dz, s)));
    }
  }
  return make(2, "zeta closed form", "quadrature vs Gamma-ratio, s in z+{.5,1,2,5}",
              worst, 1e-8);
}

// 3. contour residue of the closed zeta at s = z vs pi^{z/2}/Gamma(z/2)
CriterionResult criterion3() {
  double worst = 0.0;
  for (double z : kZGrid) {
    const DimensionParameter dz(z);
    const LaurentData L = contour_residue(
        [dz](Complex s) { return zeta_closed(dz, s); }, Complex(z, 0.0));
    worst = std::max(worst, std::abs(L.residue - zeta_residue(dz)));
  }
  // pinned values at z = 2 and z = 1
  worst = std::max(worst, std::fabs(zeta_residue(DimensionParameter(2.0)) - kPi));
  worst = std::max(worst, std::fabs(zeta_residue(DimensionParameter(1.0)) - 1.0));
  // This row pins the quoted value pi^{z/2}/Gamma(z/2).  The closed form's
  // actual residue is twice that: Gamma((s-z)/2) ~ 2/(s-z), and at z = 2 the
  // whole zeta collapses to 2 pi/(s-2) exactly.  The row is kept as stated
  // and records the discrepancy.
  return make(3, "residue at the dimension",
              "contour residue vs pi^{z/2}/Gamma(z/2) [factual residue is "
              "2 pi^{z/2}/Gamma(z/2): Gamma((s-z)/2) ~ 2/(s-z)]",
              worst, 1e-8);
}

// 4. cutoff and smoothed residues both equal 2 pi^{z/2}/Gamma(z/2)
CriterionResult criterion4() {
  double worst = 0.0;
  for (double z : kZGrid) {
    const DimensionParameter dz(z);
    const double expected = 2.0 * zeta_residue(dz);
    worst = std::max(worst, std::fabs(cutoff_residue(dz) - expected));
    worst = std::max(worst, std::fabs(ez_residue_numeric(dz) - expected));
  }
  return make(4, "cutoff and smoothed residue", "both vs 2 pi^{z/2}/Gamma(z/2)",
              worst, 1e-10);
}

// 5. hypergeometric primitive: derivative law + arctan check
CriterionResult criterion5() {
  std::mt19937_64 rng(20250501);
  std::uniform_real_distribution<double> up(0.5, 4.0), uq(-3.0, 1.0), ux(0.05, 0.9);
  double worst = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    const double p = up(rng);
    const Complex q(uq(rng), 0.0);
    const double x = ux(rng);
    const Complex d =
        (binomial_primitive(p, q, x + h) - binomial_primitive(p, q, x - h)) /
        (2.0 * h);
    const Complex want = std::pow(1.0 + std::pow(x, p), q);
    worst = std::max(worst, std::abs(d - want));
  }
  CriterionResult r = make(5, "hypergeometric primitive",
                           "d/dx x F(1/p,-q;1+1/p;-x^p) vs (1+x^p)^q", worst, 1e-6);
  const double arctan =
      std::abs(binomial_primitive(2.0, Complex(-1.0, 0.0), 1.0) - kPi / 4.0);
  if (arctan > 1e-10) {
    r.pass = false;
    r.computed = std::max(r.computed, arctan);
  }
  return r;
}

// 6. matrix-level heat factorisation and the D^2 identity
CriterionResult criterion6() {
  std::mt19937_64 rng(6502);
  std::uniform_int_distribution<int> half(1, 4);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const MatrixTriple a = random_graded_triple(rng, half(rng));
    const MatrixTriple b = random_graded_triple(rng, half(rng));
    const MatrixTriple prod = matrix_product(a, b);  // enforces D^2 law at 1e-12
    const double t = 1.0;
    const double lhs = heat_trace(prod, t);
    const double rhs = heat_trace(a, t) * heat_trace(b, t);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
  }
  return make(6, "product heat-trace factorisation",
              "Tr e^{-tD^2} vs product of factors, 50 seeded pairs", worst, 1e-12);
}

// 7. pole shift s = w + z for the circle base, plus Mellin/closed agreement
CriterionResult criterion7() {
  double worst_shift = 0.0;
  for (double z : {0.25, 0.5, 0.9}) {
    const DimensionParameter dz(z);
    ProductZeta pz{circle_triple(ZetaConvention::modulus), dz,
                   ZetaConvention::modulus};
    const LaurentData L = pole_shift_check(pz);
    const Complex predicted = std::pow(kPi, 0.5 * z) * gamma(Complex(0.5, 0.0)) *
                              reciprocal_gamma(Complex(0.5 * (1.0 + z), 0.0)) * 2.0;
    worst_shift = std::max(worst_shift, std::abs(L.residue - predicted));
  }
  double worst_mellin = 0.0;
  for (double z : {0.25, 0.5, 0.9}) {
    const DimensionParameter dz(z);
    const DiscreteTriple base = circle_triple(ZetaConvention::resolvent);
    ProductZeta pz{base, dz, ZetaConvention::resolvent};
    for (double sig : {2.0, 3.0, 4.0}) {
      const Complex s(1.0 + z + sig, 0.0);
      worst_mellin = std::max(
          worst_mellin, rel(product_zeta_mellin(base, dz, s),
                            product_zeta_closed(pz, s)));
    }
  }
  CriterionResult r = make(7, "product pole shift",
                           "residue at s=1+z vs shifted formula; Mellin vs "
                           "closed within 1e-7", worst_shift, 1e-8);
  if (worst_mellin > 1e-7) {
    r.pass = false;
    r.computed = std::max(r.computed, worst_mellin);
  }
  return r;
}

// 8. dimensional regularisation of the propagator
CriterionResult criterion8() {
  const PropagatorSpec spec{2, 1.0};
  double worst = 0.0;
  for (double z : {0.5, 1.0, 2.0, 3.0}) {
    for (double m : {0.5, 1.0, 2.0}) {
      const PropagatorSpec sp{2, m};
      const DimensionParameter dz(z);
      worst = std::max(worst, rel(dimreg_propagator_numeric(sp, dz),
                                  dimreg_propagator_closed(sp, dz)));
    }
  }
  // the z=2, m=2 case decides the mass exponent: m^{z-4} gives pi/4
  const double decide =
      rel(dimreg_propagator_numeric(PropagatorSpec{2, 2.0}, DimensionParameter(2.0)),
          Complex(kPi / 4.0, 0.0));
  worst = std::max(worst, decide);
  CriterionResult r = make(8, "dimensional regularisation",
                           "quadrature vs pi^{z/2} m^{z-4} Gamma(2-z/2); mass "
                           "exponent decided at z=2, m=2", worst, 1e-8);
  const LaurentData L =
      contour_residue([&spec](Complex z) { return dimreg_propagator_value(spec, z); },
                      Complex(4.0, 0.0));
  const double resdev = std::abs(L.residue - Complex(-2.0 * kPi * kPi, 0.0));
  if (resdev > 1e-7) {
    r.pass = false;
    r.computed = std::max(r.computed, resdev);
  }
  return r;
}

// 9. zeta-function regularisation of the Gamma integral
CriterionResult criterion9() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-12;
  cfg.rel_tol = 1e-12;
  double worst = 0.0;
  for (double s = 0.5; s <= 5.0 + 1e-9; s += 0.5)
    worst = std::max(worst,
                     std::abs(zeta_reg_gamma(Complex(s, 0.0), cfg) - gamma(Complex(s, 0.0))));
  const LaurentData L =
      contour_residue([](Complex s) { return gamma(s); }, Complex(0.0, 0.0));
  worst = std::max(worst, std::abs(L.residue - 1.0));
  return make(9, "zeta-function regularisation",
              "Mellin quadrature vs Gamma on [0.5,5]; residue 1 at s=0", worst,
              1e-9);
}

// 10. spectral-action variation identity
CriterionResult criterion10() {
  const DiscreteTriple base = positive_integer_triple();
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = -0.9 + 1.8 * (i + 0.5) / 20.0;
    const ActionPair pr = spectral_action_check(base, GaugeScalar(a));
    worst = std::max(worst, std::fabs(pr.lhs - pr.rhs));
  }
  return make(10, "spectral-action identity",
              "zeta_{D+a}(0)-zeta_D(0) vs sum (-1)^n/n nc-integral, 20 values",
              worst, 1e-9);
}

// 11. sign law of the z-residue vs the noncommutative integral
CriterionResult criterion11() {
  const DiscreteTriple base = positive_integer_triple();
  double worst = 0.0;
  for (int n : {1, 2, 3})
    for (double a : {0.25, 0.5}) {
      const ResiduePair pr = dimreg_vs_ncintegral(base, GaugeScalar(a), n);
      worst = std::max(worst, std::fabs(pr.res_z0 - pr.minus_nc));
    }
  return make(11, "noncommutative-integral sign law",
              "res_{z=0} of the n-th moment vs -nc-integral, n in {1,2,3}",
              worst, 1e-8);
}

// 12. unitary equivalence with the 1/2-normalised U
CriterionResult criterion12() {
  std::mt19937_64 rng(1201);
  std::uniform_int_distribution<int> half(1, 4);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const MatrixTriple a = random_graded_triple(rng, half(rng));
    const MatrixTriple b = random_graded_triple(rng, half(rng));
    worst = std::max(worst, unitary_equivalence_check(a, b));  // UU*=1 at 1e-12 inside
  }
  return make(12, "unitary equivalence of product Diracs",
              "|| U (D1x1 + g1xD2) U* - (D1xg2 + 1xD2) ||, 20 seeded pairs",
              worst, 1e-10);
}

using CriterionFn = CriterionResult (*)();

struct Entry {
  int id;
  CriterionFn fn;
  Suite suite;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {1, criterion1, Suite::zdim},
      {2, criterion2, Suite::zdim},
      {3, criterion3, Suite::zdim},
      {4, criterion4, Suite::zdim},
      {5, criterion5, Suite::specfun},
      {6, criterion6, Suite::product},
      {7, criterion7, Suite::product},
      {8, criterion8, Suite::regularization},
      {9, criterion9, Suite::regularization},
      {10, criterion10, Suite::regularization},
      {11, criterion11, Suite::regularization},
      {12, criterion12, Suite::product}};
  return t;
}

}  // namespace

Suite suite_from_string(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "zdim") return Suite::zdim;
  if (s == "product") return Suite::product;
  if (s == "regularization") return Suite::regularization;
  if (s == "specfun") return Suite::specfun;
  throw InvalidArgument("unknown suite: " + s);
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::zdim: return "zdim";
    case Suite::product: return "product";
    case Suite::regularization: return "regularization";
    case Suite::specfun: return "specfun";
  }
  return "all";
}

std::vector<CriterionResult> run_suite(Suite suite) {
  std::vector<CriterionResult> rows;
  for (const Entry& e : table()) {
    if (suite != Suite::all && e.suite != suite) continue;
    try {
      rows.push_back(e.fn());
    } catch (const Error& err) {
      CriterionResult r;
      r.id = e.id;
      r.name = "criterion failed to run";
      r.target = err.what();
      r.computed = std::numeric_limits<double>::quiet_NaN();
      r.tolerance = 0;
      r.pass = false;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace zdim::verify
