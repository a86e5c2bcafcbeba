#pragma once

#include <random>

#include "zdim/triples.hpp"
#include "zdim/ztriple.hpp"

namespace zdim {

/// Product of a discrete base triple with T_z, together with the zeta
/// convention of the base handle.  Pole-shift checks accept either
/// convention; value-level Mellin comparisons need the resolvent one.
struct ProductZeta {
  DiscreteTriple base;
  DimensionParameter z;
  ZetaConvention convention = ZetaConvention::modulus;
};

/// tau(e^{-t D^2}) = heat(base, t) * pi^{z/2} t^{-z/2}  (trace factorisation).
double product_heat_trace(const DiscreteTriple& base, DimensionParameter z,
                          double t, const QuadratureConfig& cfg = {});

/// Closed product zeta pi^{z/2} Gamma((s-z)/2)/Gamma(s/2) zeta_base(s-z).
/// AtPole at s = z and at s = w + z for every declared base pole w.
Complex product_zeta_closed(const ProductZeta& pz, Complex s);

/// Mellin route:
///   zeta_1(s) = (1/Gamma(s/2)) int_0^inf tau(e^{-t(1+D^2)}) pi^{z/2}
///               t^{-z/2} t^{s/2-1} dt,
/// computed by quadrature against the base heat trace.  Requires
/// Re(s) > Re(w) + z + 0.1 for the base's largest pole w.
Complex product_zeta_mellin(const DiscreteTriple& base, DimensionParameter z,
                            Complex s, const QuadratureConfig& cfg = {});

/// Contour residue of the closed product zeta at s = w + z, verified against
/// pi^{z/2} Gamma(w/2)/Gamma((w+z)/2) * res_w.  Requires 0 < z < Re(w).
LaurentData pole_shift_check(const ProductZeta& pz,
                             const QuadratureConfig& cfg = {});

/// D = D1 (x) 1 + gamma1 (x) D2 on the tensor product, grading
/// gamma1 (x) gamma2 when both factors are graded.  Verifies
/// D^2 = D1^2 (x) 1 + 1 (x) D2^2 and the anticommutation of the two
/// summands to 1e-12 ||D||^2 before returning.
MatrixTriple matrix_product(const MatrixTriple& t1, const MatrixTriple& t2);

/// Defect || U (D1 x 1 + g1 x D2) U* - (D1 x g2 + 1 x D2) || for
/// U = (1/2)(1 x 1 + g1 x 1 + 1 x g2 - g1 x g2).  Throws NotUnitary if
/// U U* deviates from the identity beyond 1e-12.
double unitary_equivalence_check(const MatrixTriple& t1,
                                 const MatrixTriple& t2);

/// Product bound of the summability lemma, evaluated at matched offsets:
/// the closed product zeta at s = p1 + z + 1/2 is finite and bounded by
/// zeta_base(p1 + 1/2) * zeta_z(z + 1/2).
bool summability_bound_check(const DiscreteTriple& base, DimensionParameter z,
                             const QuadratureConfig& cfg = {});

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Random even triple of dimension 2*half_dim: D = [[0,B],[B*,0]] with
/// gamma = diag(1,-1) blocks.
MatrixTriple random_graded_triple(std::mt19937_64& rng, int half_dim);

}  // namespace zdim
