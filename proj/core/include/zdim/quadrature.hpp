#pragma once

#include <complex>
#include <functional>

#include "zdim/errors.hpp"

namespace zdim {

using Complex = std::complex<double>;

/// Variable change used to map [0,inf) onto [0,1).
enum class TailTransform { rational, exp_decay };

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  TailTransform tail_transform = TailTransform::rational;
};

/// Pole location, order, residue (a_{-1}) and finite part (a_0) of a
/// meromorphic function at a point.  order == 0 means a regular point and
/// forces residue == 0.
struct LaurentData {
  Complex location{};
  int order = 0;
  Complex residue{};
  Complex finite_part{};
};

/// Adaptive Gauss-Kronrod 7/15 integration of a complex-valued function over
/// (a, b), where a and b may be +-infinity.  Real and imaginary parts share
/// the same panels; the panel error is the modulus of the K15-G7 difference.
///
/// Throws InvalidInterval if !(a < b) and NonConvergent if the subdivision
/// budget is exhausted before the requested tolerance is met.
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureConfig& cfg = {});

/// Residue and finite part of f at s0 by trapezoidal sampling of the circle
/// |s - s0| = radius, cross-checked at radius/2.
///
///   residue ~ (radius/n) * sum_k f(s0 + radius e^{i th_k}) e^{i th_k}
///
/// f must be holomorphic on the punctured disk with at most a simple pole at
/// s0.  Throws PoleTooClose if an evaluation on either circle fails and
/// Inconsistent if the two radii disagree beyond 1e-6 relative.
LaurentData contour_residue(const std::function<Complex(Complex)>& f,
                            Complex s0, double radius = 0.25,
                            int n_points = 64);

/// Mellin-type integral  int_0^inf h(t) t^{s/2-1} dt  for h bounded at 0 and
/// decaying rapidly at infinity.  Requires Re(s) > 0.
Complex mellin_integral(const std::function<Complex(double)>& h, Complex s,
                        const QuadratureConfig& cfg = {});

}  // namespace zdim
