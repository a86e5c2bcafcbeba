#pragma once

#include <complex>

#include "zdim/errors.hpp"

namespace zdim {

using Complex = std::complex<double>;

/// Parameters of the Gauss hypergeometric function F(a,b;c;x).
/// c must not be a nonpositive integer.
struct HypergeomParams {
  Complex a, b, c, x;
};

/// Complex Gamma function, Lanczos approximation with reflection for
/// Re(s) < 1/2.  Throws AtPole within 1e-13 of a nonpositive integer.
Complex gamma(Complex s);

/// Entire reciprocal 1/Gamma; returns 0 at the nonpositive integers.
Complex reciprocal_gamma(Complex s);

/// res_{w=-m} Gamma(w) = (-1)^m / m!
double gamma_residue(int m);

/// Falling factorial (q)_k = q (q-1) ... (q-k+1); k = 0 gives 1.
Complex falling_factorial(Complex q, int k);

/// F(a,b;c;x) summed directly for |x| < 0.95 (or a terminating series for
/// any x), and through the two-term Gamma-ratio connection formula mapping
/// the argument to 1/x for real x < -1.05.  The band |x| in [0.95, 1.05],
/// the cut [1, inf) and complex arguments of large modulus are rejected
/// with NotImplementedRegion.  A nonzero integer a-b degenerates the
/// connection formula and raises DegenerateConnection; a = b is handled by
/// averaging the formula over b +- eps (the two terms carry cancelling
/// simple poles in b).
Complex hyp2f1(const HypergeomParams& p);

/// Antiderivative of t -> (1+t^p)^q vanishing at 0:
///   x F(1/p, -q; 1+1/p; -x^p).
/// Arguments with x^p near 1 are routed through a Pfaff transformation so
/// the series argument stays well inside the unit disk.
Complex binomial_primitive(double p, Complex q, double x);

/// Hurwitz zeta sum_{n>=0} (n+q)^{-s}, continued by Euler-Maclaurin with
/// N = 15 explicit terms and Bernoulli corrections through B_14.
/// Throws AtPole within 1e-13 of s = 1.
Complex hurwitz_zeta(Complex s, double q);

/// Riemann zeta = hurwitz_zeta(s, 1).
Complex riemann_zeta(Complex s);

}  // namespace zdim
