#include "zdim/product.hpp"

#include <cmath>
#include <numbers>

#include "zdim/specfun.hpp"

namespace zdim {

namespace {

constexpr double kPi = std::numbers::pi;

double largest_pole(const DiscreteTriple& base) {
  double w = 0.0;
  if (base.zeta_handle)
    for (const ZetaPole& p : base.zeta_handle->poles)
      w = std::max(w, p.location.real());
  return w;
}

const ZetaPole& top_pole(const DiscreteTriple& base) {
  if (!base.zeta_handle || base.zeta_handle->poles.empty())
    throw InvalidArgument("base triple must declare at least one zeta pole");
  const ZetaPole* best = &base.zeta_handle->poles.front();
  for (const ZetaPole& p : base.zeta_handle->poles)
    if (p.location.real() > best->location.real()) best = &p;
  return *best;
}

}  // namespace

double product_heat_trace(const DiscreteTriple& base, DimensionParameter z,
                          double t, const QuadratureConfig&) {
  if (!(t > 0)) throw InvalidArgument("product_heat_trace: requires t > 0");
  return heat_trace(base, t) * heat_trace_closed(z, t);
}

Complex product_zeta_closed(const ProductZeta& pz, Complex s) {
  if (!pz.base.zeta_handle)
    throw UnsupportedSpectrum("product_zeta_closed: base needs a zeta_handle");
  const double zv = pz.z.value;
  if (std::abs(s - zv) < 1e-13)
    throw AtPole("product_zeta_closed: pole at s = z");
  for (const ZetaPole& p : pz.base.zeta_handle->poles)
    if (std::abs(s - (p.location + zv)) < 1e-13)
      throw AtPole("product_zeta_closed: pole at s = w + z");
  return std::pow(kPi, 0.5 * zv) * gamma(0.5 * (s - zv)) *
         reciprocal_gamma(0.5 * s) * pz.base.zeta_handle->eval(s - zv);
}

Complex product_zeta_mellin(const DiscreteTriple& base, DimensionParameter z,
                            Complex s, const QuadratureConfig& cfg) {
  const double w = largest_pole(base);
  const double zv = z.value;
  if (!(s.real() > w + zv + 0.1))
    throw OutsideConvergence(
        "product_zeta_mellin: requires Re(s) > Re(w) + z + 0.1");
  // tau(e^{-t(1+D^2)}) = e^{-t} heat(base, t) ~ C t^{-w/2} as t -> 0; the
  // t^{w/2} factor is folded into the Mellin power so the integrand's
  // h-part stays bounded at 0.
  auto h = [&base, w](double t) -> Complex {
    return std::exp(-t) * heat_trace(base, t) * std::pow(t, 0.5 * w);
  };
  return std::pow(kPi, 0.5 * zv) * reciprocal_gamma(0.5 * s) *
         mellin_integral(h, s - zv - w, cfg);
}

LaurentData pole_shift_check(const ProductZeta& pz, const QuadratureConfig&) {
  const ZetaPole& top = top_pole(pz.base);
  const double w = top.location.real();
  const double zv = pz.z.value;
  if (!(zv > 0) || !(zv < w))
    throw InvalidArgument("pole_shift_check: requires 0 < z < Re(w)");
  const LaurentData L = contour_residue(
      [&pz](Complex s) { return product_zeta_closed(pz, s); },
      top.location + zv);
  const Complex predicted = std::pow(kPi, 0.5 * zv) * gamma(0.5 * w) *
                            reciprocal_gamma(0.5 * (w + zv)) * top.residue;
  if (std::abs(L.residue - predicted) > 1e-8 * std::max(1.0, std::abs(predicted)))
    throw Inconsistent(
        "pole_shift_check: contour residue does not match the shifted pole "
        "formula");
  return L;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixTriple matrix_product(const MatrixTriple& t1, const MatrixTriple& t2) {
  if (!t1.grading)
    throw NotGraded("matrix_product: first factor must carry a grading");
  if (t1.dim > 64 || t2.dim > 64)
    throw InvalidArgument("matrix_product: factor dimensions capped at 64");
  const Eigen::MatrixXcd i1 = Eigen::MatrixXcd::Identity(t1.dim, t1.dim);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(t2.dim, t2.dim);
  const Eigen::MatrixXcd a = kron(t1.dirac, i2);
  const Eigen::MatrixXcd b = kron(*t1.grading, t2.dirac);
  const Eigen::MatrixXcd d = a + b;
  const double scale = d.norm() * d.norm();
  const double tol = scale > 0 ? 1e-12 * scale : 1e-14;
  const Eigen::MatrixXcd dsq_expected =
      kron(t1.dirac * t1.dirac, i2) + kron(i1, t2.dirac * t2.dirac);
  if ((d * d - dsq_expected).norm() > tol)
    throw IdentityViolated("matrix_product: D^2 != D1^2 x 1 + 1 x D2^2");
  if ((a * b + b * a).norm() > tol)
    throw IdentityViolated("matrix_product: summands do not anticommute");
  std::optional<Eigen::MatrixXcd> grading;
  if (t2.grading) grading = kron(*t1.grading, *t2.grading);
  return make_matrix_triple(d, std::move(grading));
}

double unitary_equivalence_check(const MatrixTriple& t1,
                                 const MatrixTriple& t2) {
  if (!t1.grading || !t2.grading)
    throw NotGraded("unitary_equivalence_check: both factors must be graded");
  const Eigen::MatrixXcd i1 = Eigen::MatrixXcd::Identity(t1.dim, t1.dim);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(t2.dim, t2.dim);
  const Eigen::MatrixXcd u =
      0.5 * (kron(i1, i2) + kron(*t1.grading, i2) + kron(i1, *t2.grading) -
             kron(*t1.grading, *t2.grading));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if ((u * u.adjoint() - id).norm() > 1e-12 * static_cast<double>(u.rows()))
    throw NotUnitary("unitary_equivalence_check: U U* != 1");
  const Eigen::MatrixXcd lhs = kron(t1.dirac, i2) + kron(*t1.grading, t2.dirac);
  const Eigen::MatrixXcd rhs = kron(t1.dirac, *t2.grading) + kron(i1, t2.dirac);
  return (u * lhs * u.adjoint() - rhs).norm();
}

bool summability_bound_check(const DiscreteTriple& base, DimensionParameter z,
                             const QuadratureConfig&) {
  const double p1 = largest_pole(base);
  ProductZeta pz{base, z, base.zeta_handle ? base.zeta_handle->convention
                                           : ZetaConvention::modulus};
  const Complex lhs = product_zeta_closed(pz, Complex(p1 + z.value + 0.5, 0.0));
  if (!std::isfinite(lhs.real()) || !std::isfinite(lhs.imag())) return false;
  const Complex zb = zeta_trace(base, Complex(p1 + 0.5, 0.0));
  const Complex zz = zeta_closed(z, Complex(z.value + 0.5, 0.0));
  return std::abs(lhs) <= std::abs(zb) * std::abs(zz) * (1.0 + 1e-9);
}

MatrixTriple random_graded_triple(std::mt19937_64& rng, int half_dim) {
  if (half_dim < 1) throw InvalidArgument("random_graded_triple: half_dim >= 1");
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int n = 2 * half_dim;
  Eigen::MatrixXcd b(half_dim, half_dim);
  for (int i = 0; i < half_dim; ++i)
    for (int j = 0; j < half_dim; ++j) b(i, j) = Complex(unif(rng), unif(rng));
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  d.topRightCorner(half_dim, half_dim) = b;
  d.bottomLeftCorner(half_dim, half_dim) = b.adjoint();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  g.topLeftCorner(half_dim, half_dim) =
      Eigen::MatrixXcd::Identity(half_dim, half_dim);
  g.bottomRightCorner(half_dim, half_dim) =
      -Eigen::MatrixXcd::Identity(half_dim, half_dim);
  return make_matrix_triple(std::move(d), std::move(g));
}

}  // namespace zdim
