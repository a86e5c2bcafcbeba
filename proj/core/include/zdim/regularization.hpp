#pragma once

#include <vector>

#include "zdim/product.hpp"

namespace zdim {

/// Power and mass of a propagator (k^2 + m^2)^{-n}.
struct PropagatorSpec {
  int n = 1;
  double m = 1.0;
};

/// Evaluation rule plus declared pole set of a meromorphic function; for the
/// closed forms used here the evaluation rule is its own continuation.
struct MeromorphicFn {
  std::function<Complex(Complex)> eval;
  std::vector<Complex> poles;
};

enum class Regulator { dimension_z, zeta_s };

struct RegularizationResult {
  Regulator regulator = Regulator::zeta_s;
  MeromorphicFn value_fn;
  Complex physical_point{};
  LaurentData laurent{};
  Complex renormalized{};
};

/// Scalar gauge potential A = a * 1 with |a| < 1.
struct GaugeScalar {
  explicit GaugeScalar(double v);
  double value;
};

/// Schwinger parametrisation check:
///   (1/Gamma(n)) int_0^inf e^{-lam (p^2+m^2)} lam^{n-1} dlam,
/// which equals (p^2+m^2)^{-n}.  Returns the quadrature value.
double schwinger_check(const PropagatorSpec& spec, double p,
                       const QuadratureConfig& cfg = {});

/// tau_z((D_z^2 + m^2)^{-n}) = pi^{z/2} m^{z-2n} Gamma(n - z/2) / Gamma(n),
/// continued to complex z.  Simple poles at z = 2n, 2n+2, ...
Complex dimreg_propagator_value(const PropagatorSpec& spec, Complex z);

/// Domain-checked closed form at real z; AtPole at the pole set.
Complex dimreg_propagator_closed(const PropagatorSpec& spec,
                                 DimensionParameter z);

/// The closed form packaged with its declared poles (in z).
MeromorphicFn dimreg_propagator_fn(const PropagatorSpec& spec);

/// Same trace by quadrature on T_z with g(y) = (y^2+m^2)^{-n}; requires
/// z < 2n (OutsideConvergence beyond).
double dimreg_propagator_numeric(const PropagatorSpec& spec,
                                 DimensionParameter z,
                                 const QuadratureConfig& cfg = {});

/// Laurent data of r at the physical point by contour sampling; the
/// renormalized value is the finite part (the pole-subtraction recipe).
RegularizationResult renormalize(const MeromorphicFn& r, Complex physical_point,
                                 const QuadratureConfig& cfg = {},
                                 Regulator regulator = Regulator::zeta_s);

/// int_0^inf t^{-1+s} e^{-t} dt by Mellin quadrature for Re(s) > 0.1,
/// matching Gamma(s); the Gamma continuation elsewhere.
Complex zeta_reg_gamma(Complex s, const QuadratureConfig& cfg = {});

/// Noncommutative integral of (A D^{-1})^n for a scalar potential on a
/// positive invertible spectrum with a modulus handle:
///   a^n res_{s=0} zeta_base(s + n).
double nc_integral(const DiscreteTriple& base, GaugeScalar a, int n,
                   const QuadratureConfig& cfg = {});

struct ActionPair {
  double lhs;
  double rhs;
};

/// Spectral-action variation identity for base spectrum {1, 2, 3, ...}:
///   zeta_{D+a}(0) - zeta_D(0)  vs  sum_n (-1)^n/n nc_integral(base, a, n),
/// the left side through the Hurwitz zeta.  Asserts |lhs - rhs| <= 1e-9.
ActionPair spectral_action_check(const DiscreteTriple& base, GaugeScalar a,
                                 const QuadratureConfig& cfg = {});

struct ResiduePair {
  double res_z0;
  double minus_nc;
};

/// Sign law res_{z=0} tau'(((A x 1) D_z^{-1})^n) = -nc_integral(base, a, n),
/// the left side realised through the product-zeta closed form
/// a^n pi^{z/2} (Gamma((n-z)/2)/Gamma(n/2)) zeta_base(n-z).
/// Asserts agreement within 1e-8.
ResiduePair dimreg_vs_ncintegral(const DiscreteTriple& base, GaugeScalar a,
                                 int n, const QuadratureConfig& cfg = {});

}  // namespace zdim
