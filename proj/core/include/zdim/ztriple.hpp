#pragma once

#include "zdim/triples.hpp"

namespace zdim {

inline constexpr double kZMax = 10.0;

/// Dimension z in (0, z_max]; larger z overflows rho(z)^{+-s} in double
/// precision without buying any coverage.
struct DimensionParameter {
  explicit DimensionParameter(double v);
  double value;
};

/// Normalisation constant rho(z) = pi^{-1/2} Gamma(z/2+1)^{1/z}.
double rho(DimensionParameter z);

/// Profile f_z(x) = rho(z) sgn(x) |x|^{1/z} with inverse
/// sgn(y) (|y|/rho(z))^z; validated on construction.
SpectrumProfile tz_profile(DimensionParameter z);

/// The triple T_z: tz_profile with weight 1/2 and declared abscissa z.
MultiplicationTriple tz_triple(DimensionParameter z);

/// tau_z(e^{-lam D^2}) = pi^{z/2} lam^{-z/2}.
double heat_trace_closed(DimensionParameter z, double lam);

/// Same closed form continued to complex z; off the real ray it cannot be a
/// positive trace (nonzero imaginary part for some lam).
Complex heat_trace_closed(Complex z, double lam);

/// Resolvent zeta tau_z((1+D^2)^{-s/2}) = pi^{z/2} Gamma((s-z)/2) / Gamma(s/2).
/// AtPole within 1e-13 of s = z.  Within 1e-13 of s in {z-2, z-4, ...} the
/// ratio is evaluated as the average over s +- 1e-6, which is the two-sided
/// continuity limit where the point is removable and the finite part where
/// it is not.
Complex zeta_closed(DimensionParameter z, Complex s);

/// res_{s=z} of the resolvent zeta: pi^{z/2} / Gamma(z/2).
double zeta_residue(DimensionParameter z);

/// Infra-red-cutoff modulus zeta, meromorphic continuation
/// rho(z)^{-s} z/(s-z).  AtPole at s = z.
Complex cutoff_zeta(DimensionParameter z, Complex s);

/// res_{s=z} of the cutoff zeta: 2 pi^{z/2} / Gamma(z/2), exactly twice
/// zeta_residue.
double cutoff_residue(DimensionParameter z);

/// Bump-smoothed spectrum: g(x) = e^{1/(x-1/2)} on x < 1/2 (0 beyond),
/// f(x) = x + c g(x) with c = 1/(2 sup|g'|), and the full odd profile
/// rho(z) sgn(x) f(|x|)^{1/z}.  f is bounded away from 0, has slope >= 1/2
/// and equals x for x >= 1/2.
struct SmoothedProfile {
  double z = 1.0;
  double c = 0.0;
  double rho_z = 0.0;
  double bump(double x) const;
  double modified(double x) const;
  double spectrum(double x) const;
};

SmoothedProfile smoothed_profile(DimensionParameter z);

/// Modulus zeta of the smoothed operator, split as in its construction:
/// rho^{-s} int_0^{1/2} f(x)^{-s/z} dx (entire, by quadrature) plus the
/// closed tail rho^{-s} (z/(s-z)) (1/2)^{1-s/z}.  Requires Re(s) > z + 0.1.
Complex ez_zeta_numeric(DimensionParameter z, Complex s,
                        const QuadratureConfig& cfg = {});

/// The closed tail term of the split form (carries the pole at s = z).
Complex ez_cutoff_tail(DimensionParameter z, Complex s);

/// Residue at s = z of the smoothed-operator zeta, extracted by contour
/// sampling of the split continuation; must equal cutoff_residue(z).
double ez_residue_numeric(DimensionParameter z, const QuadratureConfig& cfg = {});

}  // namespace zdim
