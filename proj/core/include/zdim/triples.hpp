#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zdim/quadrature.hpp"

namespace zdim {

/// Real, odd, strictly increasing spectrum function with inverse.  Encodes a
/// multiplication-model Dirac operator.
struct SpectrumProfile {
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  std::string label;
};

/// Samples the profile invariants (oddness, strict monotonicity, inverse
/// consistency on a log-spaced grid) and throws InvalidArgument on failure.
void validate_profile(const SpectrumProfile& p);

/// Multiplication triple: tau(g(D)) = weight * int g(f(x)) dx over R.
struct MultiplicationTriple {
  SpectrumProfile profile;
  double weight = 0.5;
  /// Abscissa of convergence of the zeta trace, when known (z for T_z).
  double abscissa = std::numeric_limits<double>::quiet_NaN();
};

enum class ZetaConvention { resolvent, modulus };

struct ZetaPole {
  Complex location;
  Complex residue;
};

/// Closed-form analytic continuation of a discrete spectrum's zeta function
/// together with its declared pole list and convention:
///   resolvent: sum m_k (1+lambda_k^2)^{-s/2},  modulus: sum m_k |lambda_k|^{-s}.
struct ZetaHandle {
  std::function<Complex(Complex)> eval;
  std::vector<ZetaPole> poles;
  ZetaConvention convention = ZetaConvention::modulus;
};

/// Eigenvalue/multiplicity sequence with |lambda_k| nondecreasing and, for
/// infinite spectra, |lambda_k| -> inf.
struct DiscreteTriple {
  std::function<double(std::size_t)> eigenvalue;
  std::function<double(std::size_t)> multiplicity;
  std::optional<std::size_t> count;  // finite spectra
  std::optional<ZetaHandle> zeta_handle;
  // |lambda| = 1, 2, 3, ... with constant total multiplicity per level;
  // enables the incremental theta summation for heat traces.
  bool integer_ladder = false;
  double ladder_multiplicity = 1.0;
  std::string label;
};

/// Finite hermitian Dirac with an optional grading (hermitian involution
/// anticommuting with the Dirac).
struct MatrixTriple {
  Eigen::MatrixXcd dirac;
  std::optional<Eigen::MatrixXcd> grading;
  int dim = 0;
};

/// Validating constructor: hermiticity of D, gamma^2 = 1 to 1e-14 and
/// ||gamma D + D gamma|| <= 1e-12 ||D||.  Throws InvalidArgument /
/// IdentityViolated.
MatrixTriple make_matrix_triple(Eigen::MatrixXcd dirac,
                                std::optional<Eigen::MatrixXcd> grading = {});

/// tau(g(D)) = weight * (int_0^inf g(f(x)) dx + int_0^inf g(-f(x)) dx).
Complex trace_of_function(const MultiplicationTriple& t,
                          const std::function<Complex(double)>& g,
                          const QuadratureConfig& cfg = {});

/// tau(e^{-time D^2}).
double heat_trace(const MultiplicationTriple& t, double time,
                  const QuadratureConfig& cfg = {});
double heat_trace(const DiscreteTriple& t, double time);
double heat_trace(const MatrixTriple& t, double time);

/// N(lambda) = weight * (f^{-1}(lambda) - f^{-1}(-lambda)).
double counting_function(const MultiplicationTriple& t, double lam);

/// Resolvent-convention zeta tau((1+D^2)^{-s/2}) by quadrature; requires
/// Re(s) > abscissa + 0.1 when the abscissa is declared.
Complex zeta_trace(const MultiplicationTriple& t, Complex s,
                   const QuadratureConfig& cfg = {});

/// Zeta of a discrete spectrum: the closed-form handle when present (in the
/// handle's declared convention), otherwise direct resolvent summation.
Complex zeta_trace(const DiscreteTriple& t, Complex s);

// Canonical discrete spectra used throughout.

/// lambda = +-k (k >= 1), multiplicity 1 each.  Modulus handle 2 zeta_R(s);
/// resolvent handle 2 sum_k (1+k^2)^{-s/2} continued by a binomial series.
/// Both declare the pole at s = 1 with residue 2.
DiscreteTriple circle_triple(ZetaConvention convention = ZetaConvention::modulus);

/// lambda_k = k (k >= 1), multiplicity 1, modulus handle zeta_R with pole
/// {1, 1}.  Invertible positive spectrum.
DiscreteTriple positive_integer_triple();

/// Single eigenvalue 0 with multiplicity 1; resolvent handle identically 1.
DiscreteTriple point_triple();

/// lambda_k = k^{1/p}, modulus handle zeta_R(s/p) with pole {p, residue p}.
DiscreteTriple power_spectrum_triple(double p);

/// lambda_k = sqrt(2k), modulus handle 2^{-s/2} zeta_R(s/2) with pole {2, 1}.
DiscreteTriple sqrt_lattice_triple();

}  // namespace zdim
