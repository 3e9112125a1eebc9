#ifndef COYOTE_SPECTRAL_HPP
#define COYOTE_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "coyote/config.hpp"

namespace coyote {

/// det A(s) of the Laplace-domain system matrix, stored as a polynomial
/// D(u) in u = s^2 (the matrix depends on s only through s^2). Degree n,
/// monic, zero constant term for the released chain.
struct EvenPolynomial {
  std::vector<double> coeffs; // c_0 .. c_n, D(u) = sum c_k u^k

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval_u(double u) const;
  double eval_s(double s) const { return eval_u(s * s); }
  std::complex<double> eval_s(std::complex<double> s) const;
};

/// Characteristic polynomial via the tridiagonal three-term recurrence
///   D_j = d_j * D_{j-1} - alpha_j * beta_{j-1} * D_{j-2},
/// d_1 = u+1, d_j = u+alpha_j+beta_j (2<=j<=n-1), d_n = u+alpha_n,
/// beta_1 == 1, D_0 == 1, D_{-1} == 0.
EvenPolynomial char_poly(const NondimSystem& sys);

/// Cramer-rule numerator for mass j: the transform's numerator is value/s
/// in the far field, value = -prod_{i=2..j} alpha_i (empty product = 1).
struct NumeratorConstant {
  int j = 0;
  double value = 0.0;
};

NumeratorConstant numerator_constant(const NondimSystem& sys, int j);

/// The three coefficients the asymptotics consume, plus their closed-form
/// references: a2_ref = (prod alpha)(sum m / m1), a_top_ref = trace of A
/// at s = 0.
struct CoefficientChecks {
  double a0 = 0.0;
  double a2 = 0.0;
  double a_top = 0.0;
  double a2_ref = 0.0;
  double a_top_ref = 0.0;
};

CoefficientChecks poly_coefficient_checks(const NondimSystem& sys);

/// Test oracle: det A(s) by cofactor expansion of the dense assembled
/// matrix. O(n!) — guarded to n <= 8.
double brute_force_det(const NondimSystem& sys, double s);
std::complex<double> brute_force_det(const NondimSystem& sys, std::complex<double> s);

} // namespace coyote

#endif
