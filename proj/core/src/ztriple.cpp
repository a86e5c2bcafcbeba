#include "zdim/ztriple.hpp"

#include <cmath>
#include <numbers>

#include "zdim/specfun.hpp"

namespace zdim {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_negative_integer_half(Complex w, double tol) {
  // w within tol of {-1, -2, -3, ...}
  const long m = std::lround(w.real());
  if (m >= 0) return false;
  return std::abs(w - Complex(static_cast<double>(m), 0.0)) < tol;
}

Complex zeta_closed_raw(double z, Complex s) {
  return std::pow(kPi, 0.5 * z) * gamma(0.5 * (s - z)) *
         reciprocal_gamma(0.5 * s);
}

Complex ez_zeta_split(const SmoothedProfile& sp, Complex s,
                      const QuadratureConfig& cfg) {
  const Complex entire =
      integrate([&sp, s](double x) -> Complex {
        return std::pow(sp.modified(x), -s / sp.z);
      }, 0.0, 0.5, cfg);
  return std::pow(sp.rho_z, -s) * entire +
         ez_cutoff_tail(DimensionParameter(sp.z), s);
}

}  // namespace

DimensionParameter::DimensionParameter(double v) : value(v) {
  if (!(v > 0) || !(v <= kZMax))
    throw InvalidArgument("DimensionParameter: z must lie in (0, 10]");
}

double rho(DimensionParameter z) {
  return std::exp(-0.5 * std::log(kPi) + std::lgamma(0.5 * z.value + 1.0) / z.value);
}

SpectrumProfile tz_profile(DimensionParameter z) {
  const double r = rho(z);
  const double zv = z.value;
  SpectrumProfile p;
  p.forward = [r, zv](double x) {
    if (x == 0.0) return 0.0;
    return r * (x > 0 ? 1.0 : -1.0) * std::pow(std::fabs(x), 1.0 / zv);
  };
  p.inverse = [r, zv](double y) {
    if (y == 0.0) return 0.0;
    return (y > 0 ? 1.0 : -1.0) * std::pow(std::fabs(y) / r, zv);
  };
  p.label = "f_z, z = " + std::to_string(zv);
  validate_profile(p);
  return p;
}

MultiplicationTriple tz_triple(DimensionParameter z) {
  MultiplicationTriple t;
  t.profile = tz_profile(z);
  t.weight = 0.5;
  t.abscissa = z.value;
  return t;
}

double heat_trace_closed(DimensionParameter z, double lam) {
  if (!(lam > 0)) throw InvalidArgument("heat_trace_closed: requires lambda > 0");
  return std::exp(0.5 * z.value * (std::log(kPi) - std::log(lam)));
}

Complex heat_trace_closed(Complex z, double lam) {
  if (!(lam > 0)) throw InvalidArgument("heat_trace_closed: requires lambda > 0");
  return std::exp(0.5 * z * (std::log(kPi) - std::log(lam)));
}

Complex zeta_closed(DimensionParameter z, Complex s) {
  if (std::abs(s - z.value) < 1e-13)
    throw AtPole("zeta_closed: pole at s = z");
  if (near_negative_integer_half(0.5 * (s - z.value), 1e-13)) {
    const double d = 1e-6;
    return 0.5 * (zeta_closed_raw(z.value, s + d) + zeta_closed_raw(z.value, s - d));
  }
  return zeta_closed_raw(z.value, s);
}

double zeta_residue(DimensionParameter z) {
  return std::exp(0.5 * z.value * std::log(kPi) - std::lgamma(0.5 * z.value));
}

Complex cutoff_zeta(DimensionParameter z, Complex s) {
  if (std::abs(s - z.value) < 1e-13) throw AtPole("cutoff_zeta: pole at s = z");
  return std::pow(rho(z), -s) * (z.value / (s - z.value));
}

double cutoff_residue(DimensionParameter z) { return 2.0 * zeta_residue(z); }

double SmoothedProfile::bump(double x) const {
  if (x >= 0.5) return 0.0;
  return std::exp(1.0 / (x - 0.5));
}

double SmoothedProfile::modified(double x) const { return x + c * bump(x); }

double SmoothedProfile::spectrum(double x) const {
  if (x == 0.0) return 0.0;
  return rho_z * (x > 0 ? 1.0 : -1.0) * std::pow(modified(std::fabs(x)), 1.0 / z);
}

SmoothedProfile smoothed_profile(DimensionParameter z) {
  SmoothedProfile sp;
  sp.z = z.value;
  sp.rho_z = rho(z);
  // sup |g'| on [0, 1/2) by dense sampling, |g'(x)| = g(x)/(x-1/2)^2.
  const int n = 4001;
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = 0.5 * static_cast<double>(i) / n;
    const double d = x - 0.5;
    const double g = std::exp(1.0 / d);
    sup = std::max(sup, g / (d * d));
  }
  sp.c = 1.0 / (2.0 * sup);
  return sp;
}

Complex ez_cutoff_tail(DimensionParameter z, Complex s) {
  const double zv = z.value;
  return std::pow(rho(z), -s) * (zv / (s - zv)) *
         std::pow(0.5, 1.0 - s / zv);
}

Complex ez_zeta_numeric(DimensionParameter z, Complex s,
                        const QuadratureConfig& cfg) {
  if (!(s.real() > z.value + 0.1))
    throw OutsideConvergence("ez_zeta_numeric: requires Re(s) > z + 0.1");
  return ez_zeta_split(smoothed_profile(z), s, cfg);
}

double ez_residue_numeric(DimensionParameter z, const QuadratureConfig& cfg) {
  const SmoothedProfile sp = smoothed_profile(z);
  const LaurentData L = contour_residue(
      [&sp, &cfg](Complex s) { return ez_zeta_split(sp, s, cfg); },
      Complex(z.value, 0.0));
  const double res = L.residue.real();
  if (std::abs(res - cutoff_residue(z)) > 1e-10 * std::max(1.0, cutoff_residue(z)))
    throw Inconsistent(
        "ez_residue_numeric: residue does not match the cutoff residue");
  return res;
}

}  // namespace zdim
