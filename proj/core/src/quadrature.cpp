#include "zdim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace zdim {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1] (QUADPACK dqk15).
// Odd-indexed abscissae are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Exponent of the rational tail map x = (1-t)^{-k} - 1 and scale of the
// exponential map x = -k ln(1-t).  k = 1 cannot resolve algebraic tails
// x^{-a} with a near 1 in double precision: the mass beyond the largest
// representable x is O(2^{-53(a-1)}), several percent for a - 1 ~ 1/12.
constexpr double kTailExponent = 64.0;
constexpr double kTailCutoffX = 1e250;

bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

struct Panel {
  double a, b;
  Complex val;
  double err;
};

Panel gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex k15 = kWgk[7] * fc;
  Complex g7 = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const Complex lo = f(c - h * kXgk[j]);
    const Complex hi = f(c + h * kXgk[j]);
    k15 += kWgk[j] * (lo + hi);
    if (j % 2 == 1) g7 += kWg[(j - 1) / 2] * (lo + hi);
  }
  if (!finite(k15) || !finite(g7))
    throw NonConvergent("integrate: non-finite integrand value on panel");
  return {a, b, k15 * h, std::abs((k15 - g7) * h)};
}

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0) || cfg.max_subdivisions < 1)
    throw InvalidArgument(
        "QuadratureConfig: requires abs_tol > 0, rel_tol > 0, "
        "max_subdivisions >= 1");
}

Complex adaptive_finite(const std::function<Complex(double)>& f, double a,
                        double b, const QuadratureConfig& cfg) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(gk15(f, a, b));
  int splits = 0;
  for (;;) {
    Complex total = 0.0;
    double err = 0.0;
    for (const Panel& p : panels) {
      total += p.val;
      err += p.err;
    }
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
      return total;
    if (splits >= cfg.max_subdivisions)
      throw NonConvergent("integrate: subdivision budget exhausted");
    int worst = -1;
    double werr = 0.0;
    for (int i = 0; i < static_cast<int>(panels.size()); ++i) {
      const Panel& p = panels[i];
      const double minw =
          64.0 * kEps * std::max({1.0, std::fabs(p.a), std::fabs(p.b)});
      if (p.b - p.a > minw && p.err > werr) {
        worst = i;
        werr = p.err;
      }
    }
    if (worst < 0)
      throw NonConvergent(
          "integrate: tolerance unreachable at double resolution");
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
    ++splits;
  }
}

// Wraps f on a half line into an integrand on (0,1).  sign = +1 integrates
// over [base, inf), sign = -1 over (-inf, base].
std::function<Complex(double)> tail_wrap(const std::function<Complex(double)>& f,
                                         double base, double sign,
                                         TailTransform transform) {
  return [&f, base, sign, transform](double t) -> Complex {
    const double u = 1.0 - t;
    if (!(u > 0.0)) return 0.0;
    double x, jac;
    if (transform == TailTransform::rational) {
      const double p = std::pow(u, -kTailExponent);
      if (!(p - 1.0 < kTailCutoffX)) return 0.0;
      x = p - 1.0;
      jac = kTailExponent * p / u;
    } else {
      x = -kTailExponent * std::log(u);
      jac = kTailExponent / u;
    }
    const Complex v = f(base + sign * x) * jac;
    if (!finite(v) && x > 1e6) return 0.0;  // decay precondition past the bulk
    return v;
  };
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureConfig& cfg) {
  validate(cfg);
  if (std::isnan(a) || std::isnan(b) || !(a < b))
    throw InvalidInterval("integrate: requires a < b");
  const bool ia = std::isinf(a);
  const bool ib = std::isinf(b);
  if (ia && ib) return integrate(f, a, 0.0, cfg) + integrate(f, 0.0, b, cfg);
  if (!ia && !ib) return adaptive_finite(f, a, b, cfg);
  if (ib) return adaptive_finite(tail_wrap(f, a, +1.0, cfg.tail_transform), 0.0, 1.0, cfg);
  return adaptive_finite(tail_wrap(f, b, -1.0, cfg.tail_transform), 0.0, 1.0, cfg);
}

LaurentData contour_residue(const std::function<Complex(Complex)>& f,
                            Complex s0, double radius, int n_points) {
  if (!(radius > 0) || n_points < 8)
    throw InvalidArgument("contour_residue: requires radius > 0, n_points >= 8");

  auto probe = [&](double r, Complex& res, Complex& fp) {
    std::vector<Complex> vals(n_points), phases(n_points);
    Complex acc = 0.0;
    for (int k = 0; k < n_points; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n_points;
      const Complex e{std::cos(th), std::sin(th)};
      Complex v;
      try {
        v = f(s0 + r * e);
      } catch (const Error& err) {
        throw PoleTooClose(std::string("contour_residue: evaluation failed "
                                       "on the circle: ") + err.what());
      }
      if (!finite(v))
        throw PoleTooClose("contour_residue: non-finite value on the circle");
      vals[k] = v;
      phases[k] = e;
      acc += v * e;
    }
    res = acc * (r / n_points);
    Complex f0 = 0.0;
    for (int k = 0; k < n_points; ++k) f0 += vals[k] - res / (r * phases[k]);
    fp = f0 / static_cast<double>(n_points);
  };

  Complex res1, fp1, res2, fp2;
  probe(radius, res1, fp1);
  probe(0.5 * radius, res2, fp2);
  const double denom = std::max(std::abs(res1), std::abs(res2));
  if (denom > 1e-8 && std::abs(res1 - res2) > 1e-6 * denom)
    throw Inconsistent("contour_residue: residues at radius r and r/2 differ "
                       "beyond 1e-6 relative");

  LaurentData out;
  out.location = s0;
  if (std::abs(res1) <= 1e-10 * std::max(1.0, std::abs(fp1))) {
    out.order = 0;
    out.residue = 0.0;
  } else {
    out.order = 1;
    out.residue = res1;
  }
  out.finite_part = fp1;
  return out;
}

Complex mellin_integral(const std::function<Complex(double)>& h, Complex s,
                        const QuadratureConfig& cfg) {
  validate(cfg);
  const double sigma = s.real();
  if (!(sigma > 0.05))
    throw OutsideConvergence("mellin_integral: requires Re(s) > 0");

  // On (0,1] substitute t = u^m so the endpoint behaves like u^{m s/2 - 1}
  // with exponent >= 1.
  const int m = std::max(2, static_cast<int>(std::ceil(4.0 / sigma)));
  auto low = [&](double u) -> Complex {
    const double t = std::pow(u, static_cast<double>(m));
    if (t < 1e-290) return 0.0;
    return static_cast<double>(m) * h(t) *
           std::pow(u, 0.5 * static_cast<double>(m) * s - 1.0);
  };
  const Complex part1 = adaptive_finite(low, 0.0, 1.0, cfg);

  auto high = [&](double t) -> Complex { return h(t) * std::pow(t, 0.5 * s - 1.0); };
  const Complex part2 =
      integrate(high, 1.0, std::numeric_limits<double>::infinity(), cfg);
  return part1 + part2;
}

}  // namespace zdim
