#include "zdim/triples.hpp"

#include <cmath>
#include <limits>

#include "zdim/specfun.hpp"

namespace zdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxTerms = 200'000'000;

// sum_{j>=1} M e^{-t j^2} with two multiplies per term:
// q^{(j+1)^2} = q^{j^2} * q^{2j+1}.
double theta_ladder_sum(double t, double mult) {
  const double q = std::exp(-t);
  double term = q;        // q^{1}
  double odd = q * q * q; // q^{2j+1} at j = 1
  const double q2 = q * q;
  double sum = 0.0, comp = 0.0;
  for (std::size_t j = 1; j <= kMaxTerms; ++j) {
    const double y = mult * term - comp;  // Kahan
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
    if (mult * term < 1e-16) return sum;
    term *= odd;
    odd *= q2;
  }
  throw NonConvergent("heat_trace: discrete summation exceeded term budget");
}

Complex zeta_direct_resolvent(const DiscreteTriple& t, Complex s) {
  Complex sum = 0.0;
  const std::size_t cap = t.count ? *t.count : 20'000'000;
  for (std::size_t k = 0; k < cap; ++k) {
    const double lam = t.eigenvalue(k);
    const Complex term =
        t.multiplicity(k) * std::pow(1.0 + lam * lam, -0.5 * s);
    sum += term;
    if (!t.count && std::abs(term) < 1e-14 * std::abs(sum) && lam * lam > 1.0)
      return sum;
  }
  if (t.count) return sum;
  throw OutsideConvergence(
      "zeta_trace: direct summation did not converge; a zeta_handle is "
      "required outside the convergence half-plane");
}

}  // namespace

void validate_profile(const SpectrumProfile& p) {
  if (!p.forward || !p.inverse)
    throw InvalidArgument("SpectrumProfile: forward and inverse required");
  std::vector<double> xs;
  for (double x = 1e-6; x <= 1.0000001e6; x *= std::pow(10.0, 0.25))
    xs.push_back(x);
  // oddness and inverse consistency
  for (double x : xs) {
    const double fx = p.forward(x);
    if (std::abs(p.forward(-x) + fx) > 1e-10 * (1.0 + std::abs(fx)))
      throw InvalidArgument("SpectrumProfile: not odd at x = " + std::to_string(x));
    if (std::abs(p.inverse(fx) - x) > 1e-10 * (1.0 + std::abs(x)))
      throw InvalidArgument("SpectrumProfile: inverse inconsistent at x = " +
                            std::to_string(x));
  }
  // strict monotonicity over the symmetric sample
  std::vector<double> grid;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) grid.push_back(-*it);
  grid.push_back(0.0);
  for (double x : xs) grid.push_back(x);
  double prev = p.forward(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = p.forward(grid[i]);
    if (!(cur > prev))
      throw InvalidArgument("SpectrumProfile: not strictly increasing");
    prev = cur;
  }
}

MatrixTriple make_matrix_triple(Eigen::MatrixXcd dirac,
                                std::optional<Eigen::MatrixXcd> grading) {
  const auto n = dirac.rows();
  if (n == 0 || dirac.cols() != n)
    throw InvalidArgument("MatrixTriple: dirac must be square and nonempty");
  const double dn = dirac.norm();
  if ((dirac - dirac.adjoint()).norm() > 1e-12 * std::max(1.0, dn))
    throw InvalidArgument("MatrixTriple: dirac not hermitian");
  if (grading) {
    if (grading->rows() != n || grading->cols() != n)
      throw InvalidArgument("MatrixTriple: grading dimension mismatch");
    if ((*grading - grading->adjoint()).norm() > 1e-12 * std::max(1.0, grading->norm()))
      throw IdentityViolated("MatrixTriple: grading not hermitian");
    const Eigen::MatrixXcd g2 = (*grading) * (*grading);
    if ((g2 - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-14)
      throw IdentityViolated("MatrixTriple: gamma^2 != 1");
    const double anti = ((*grading) * dirac + dirac * (*grading)).norm();
    if (anti > (dn > 0 ? 1e-12 * dn : 1e-14))
      throw IdentityViolated("MatrixTriple: gamma D + D gamma != 0");
  }
  MatrixTriple t;
  t.dirac = std::move(dirac);
  t.grading = std::move(grading);
  t.dim = static_cast<int>(n);
  return t;
}

Complex trace_of_function(const MultiplicationTriple& t,
                          const std::function<Complex(double)>& g,
                          const QuadratureConfig& cfg) {
  if (!(t.weight > 0)) throw InvalidArgument("MultiplicationTriple: weight must be > 0");
  const auto& f = t.profile.forward;
  const Complex plus = integrate([&](double x) { return g(f(x)); }, 0.0, kInf, cfg);
  const Complex minus = integrate([&](double x) { return g(-f(x)); }, 0.0, kInf, cfg);
  return t.weight * (plus + minus);
}

double heat_trace(const MultiplicationTriple& t, double time,
                  const QuadratureConfig& cfg) {
  if (!(time > 0)) throw InvalidArgument("heat_trace: requires time > 0");
  const Complex v = trace_of_function(
      t, [time](double y) -> Complex { return std::exp(-time * y * y); }, cfg);
  if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real())))
    throw NonConvergent("heat_trace: unexpected imaginary part");
  return v.real();
}

double heat_trace(const DiscreteTriple& t, double time) {
  if (!(time > 0)) throw InvalidArgument("heat_trace: requires time > 0");
  if (t.integer_ladder) return theta_ladder_sum(time, t.ladder_multiplicity);
  double sum = 0.0;
  const std::size_t cap = t.count ? *t.count : kMaxTerms;
  for (std::size_t k = 0; k < cap; ++k) {
    const double lam = t.eigenvalue(k);
    const double term = t.multiplicity(k) * std::exp(-time * lam * lam);
    sum += term;
    if (!t.count && term < 1e-16 && time * lam * lam > 1.0) return sum;
  }
  if (t.count) return sum;
  throw NonConvergent("heat_trace: discrete summation exceeded term budget");
}

double heat_trace(const MatrixTriple& t, double time) {
  if (!(time > 0)) throw InvalidArgument("heat_trace: requires time > 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t.dirac,
                                                     Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()[i];
    sum += std::exp(-time * lam * lam);
  }
  return sum;
}

double counting_function(const MultiplicationTriple& t, double lam) {
  if (!(lam > 0)) throw InvalidArgument("counting_function: requires lambda > 0");
  return t.weight * (t.profile.inverse(lam) - t.profile.inverse(-lam));
}

Complex zeta_trace(const MultiplicationTriple& t, Complex s,
                   const QuadratureConfig& cfg) {
  if (std::isfinite(t.abscissa) && !(s.real() > t.abscissa + 0.1))
    throw OutsideConvergence("zeta_trace: Re(s) must exceed the abscissa by 0.1");
  return trace_of_function(
      t,
      [s](double y) -> Complex {
        const double base = 1.0 + y * y;
        if (!(base < 1e300)) return 0.0;
        return std::pow(base, -0.5 * s);
      },
      cfg);
}

Complex zeta_trace(const DiscreteTriple& t, Complex s) {
  if (t.zeta_handle) {
    for (const ZetaPole& p : t.zeta_handle->poles)
      if (std::abs(s - p.location) < 1e-13)
        throw AtPole("zeta_trace: s at a declared pole of the handle");
    return t.zeta_handle->eval(s);
  }
  return zeta_direct_resolvent(t, s);
}

DiscreteTriple circle_triple(ZetaConvention convention) {
  DiscreteTriple t;
  t.eigenvalue = [](std::size_t k) {
    const double j = static_cast<double>(k / 2 + 1);
    return (k % 2 == 0) ? j : -j;
  };
  t.multiplicity = [](std::size_t) { return 1.0; };
  t.integer_ladder = true;
  t.ladder_multiplicity = 2.0;
  t.label = "circle";
  ZetaHandle h;
  h.convention = convention;
  h.poles = {{Complex(1.0, 0.0), Complex(2.0, 0.0)}};
  if (convention == ZetaConvention::modulus) {
    h.eval = [](Complex s) { return 2.0 * riemann_zeta(s); };
  } else {
    // 2 sum_k (1+k^2)^{-s/2} = 2 [ 2^{-s/2} + sum_j C(-s/2,j) (zeta(s+2j)-1) ],
    // geometric in j since zeta(s+2j)-1 ~ 2^{-s-2j}.
    h.eval = [](Complex s) {
      Complex sum = std::pow(2.0, -0.5 * s);
      Complex binom = 1.0;
      for (int j = 0; j < 400; ++j) {
        const Complex term = binom * (riemann_zeta(s + 2.0 * j) - 1.0);
        sum += term;
        if (j > 3 && std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum)))
          break;
        binom *= (-0.5 * s - static_cast<double>(j)) / static_cast<double>(j + 1);
      }
      return 2.0 * sum;
    };
  }
  t.zeta_handle = std::move(h);
  return t;
}

DiscreteTriple positive_integer_triple() {
  DiscreteTriple t;
  t.eigenvalue = [](std::size_t k) { return static_cast<double>(k + 1); };
  t.multiplicity = [](std::size_t) { return 1.0; };
  t.integer_ladder = true;
  t.ladder_multiplicity = 1.0;
  t.label = "positive integers";
  ZetaHandle h;
  h.convention = ZetaConvention::modulus;
  h.poles = {{Complex(1.0, 0.0), Complex(1.0, 0.0)}};
  h.eval = [](Complex s) { return riemann_zeta(s); };
  t.zeta_handle = std::move(h);
  return t;
}

DiscreteTriple point_triple() {
  DiscreteTriple t;
  t.eigenvalue = [](std::size_t) { return 0.0; };
  t.multiplicity = [](std::size_t) { return 1.0; };
  t.count = 1;
  t.label = "point";
  ZetaHandle h;
  h.convention = ZetaConvention::resolvent;
  h.eval = [](Complex) { return Complex(1.0, 0.0); };
  t.zeta_handle = std::move(h);
  return t;
}

DiscreteTriple power_spectrum_triple(double p) {
  if (!(p > 0)) throw InvalidArgument("power_spectrum_triple: requires p > 0");
  DiscreteTriple t;
  t.eigenvalue = [p](std::size_t k) {
    return std::pow(static_cast<double>(k + 1), 1.0 / p);
  };
  t.multiplicity = [](std::size_t) { return 1.0; };
  t.label = "k^{1/p}";
  ZetaHandle h;
  h.convention = ZetaConvention::modulus;
  h.poles = {{Complex(p, 0.0), Complex(p, 0.0)}};
  h.eval = [p](Complex s) { return riemann_zeta(s / p); };
  t.zeta_handle = std::move(h);
  return t;
}

DiscreteTriple sqrt_lattice_triple() {
  DiscreteTriple t;
  t.eigenvalue = [](std::size_t k) {
    return std::sqrt(2.0 * static_cast<double>(k + 1));
  };
  t.multiplicity = [](std::size_t) { return 1.0; };
  t.label = "sqrt(2k)";
  ZetaHandle h;
  h.convention = ZetaConvention::modulus;
  h.poles = {{Complex(2.0, 0.0), Complex(1.0, 0.0)}};
  h.eval = [](Complex s) {
    return std::pow(2.0, -0.5 * s) * riemann_zeta(0.5 * s);
  };
  t.zeta_handle = std::move(h);
  return t;
}

}  // namespace zdim
