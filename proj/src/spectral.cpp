#include "coyote/spectral.hpp"

#include <numeric>
#include <stdexcept>

namespace coyote {

double EvenPolynomial::eval_u(double u) const {
  double acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
  return acc;
}

std::complex<double> EvenPolynomial::eval_s(std::complex<double> s) const {
  const std::complex<double> u = s * s;
  std::complex<double> acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
  return acc;
}

namespace {

// Polynomials in u with long double coefficients. The final constant term
// is an exact cancellation of two products; 80-bit accumulation keeps its
// floating-point remnant well below the double coefficients it sits next
// to.
using Poly = std::vector<long double>;

Poly shifted_scaled(const Poly& p, long double c) {
  // (u + c) * p
  Poly out(p.size() + 1, 0.0L);
  for (size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] += c * p[i];
  }
  return out;
}

void subtract_scaled(Poly& p, const Poly& q, long double c) {
  if (p.size() < q.size()) p.resize(q.size(), 0.0L);
  for (size_t i = 0; i < q.size(); ++i) p[i] -= c * q[i];
}

} // namespace

EvenPolynomial char_poly(const NondimSystem& sys) {
  const int n = sys.size();
  if (n < 2) throw std::invalid_argument("char_poly: need n >= 2");

  // D_j = d_j D_{j-1} - alpha_j beta_{j-1} D_{j-2}; beta_1 == 1.
  Poly prev = {1.0L}; // D_0
  Poly prev2 = {};    // D_{-1} == 0
  for (int j = 1; j <= n; ++j) {
    long double diag_const; // constant term of d_j(u) = u + diag_const
    if (j == 1)
      diag_const = 1.0L;
    else if (j < n)
      diag_const = static_cast<long double>(sys.alpha(j)) + static_cast<long double>(sys.beta(j));
    else
      diag_const = static_cast<long double>(sys.alpha(n));

    Poly cur = shifted_scaled(prev, diag_const);
    if (j >= 2) {
      const long double beta_prev =
          (j == 2) ? 1.0L : static_cast<long double>(sys.beta(j - 1));
      subtract_scaled(cur, prev2, static_cast<long double>(sys.alpha(j)) * beta_prev);
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }

  EvenPolynomial poly;
  poly.coeffs.resize(prev.size());
  for (size_t i = 0; i < prev.size(); ++i) poly.coeffs[i] = static_cast<double>(prev[i]);
  return poly;
}

NumeratorConstant numerator_constant(const NondimSystem& sys, int j) {
  if (j < 1 || j > sys.size())
    throw std::out_of_range("numerator_constant: mass index out of range");
  double prod = 1.0;
  for (int i = 2; i <= j; ++i) prod *= sys.alpha(i);
  return NumeratorConstant{j, -prod};
}

CoefficientChecks poly_coefficient_checks(const NondimSystem& sys) {
  const int n = sys.size();
  const EvenPolynomial poly = char_poly(sys);

  CoefficientChecks checks;
  checks.a0 = poly.coeffs[0];
  checks.a2 = poly.coeffs[1];
  checks.a_top = poly.coeffs[static_cast<size_t>(n - 1)];

  // a2 reference: (prod alpha) * (sum m / m1), reconstructed from the
  // nondimensional data alone via m_j/m1 = (k_{j-1}/k1)/alpha_j and
  // k_j/k_{j-1} = beta_j/alpha_j.
  double mass_ratio_sum = 1.0; // m1/m1
  double k_ratio = 1.0;        // k_{j-1}/k1, starts at j=2 -> k1/k1
  for (int j = 2; j <= n; ++j) {
    mass_ratio_sum += k_ratio / sys.alpha(j);
    if (j <= n - 1) k_ratio *= sys.beta(j) / sys.alpha(j); // -> k_j/k1
  }
  double alpha_prod = 1.0;
  for (int j = 2; j <= n; ++j) alpha_prod *= sys.alpha(j);
  checks.a2_ref = alpha_prod * mass_ratio_sum;

  double trace = 1.0; // first diagonal entry of A at s = 0
  for (int j = 2; j <= n - 1; ++j) trace += sys.alpha(j) + sys.beta(j);
  trace += sys.alpha(n);
  checks.a_top_ref = trace;
  return checks;
}

namespace {

template <typename Scalar>
std::vector<std::vector<Scalar>> assemble_matrix(const NondimSystem& sys, Scalar s) {
  const int n = sys.size();
  const Scalar u = s * s;
  std::vector<std::vector<Scalar>> a(static_cast<size_t>(n),
                                     std::vector<Scalar>(static_cast<size_t>(n), Scalar(0)));
  a[0][0] = u + Scalar(1);
  a[0][1] = Scalar(-1);
  for (int j = 2; j <= n - 1; ++j) {
    a[static_cast<size_t>(j - 1)][static_cast<size_t>(j - 2)] = Scalar(-sys.alpha(j));
    a[static_cast<size_t>(j - 1)][static_cast<size_t>(j - 1)] =
        u + Scalar(sys.alpha(j) + sys.beta(j));
    a[static_cast<size_t>(j - 1)][static_cast<size_t>(j)] = Scalar(-sys.beta(j));
  }
  a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = Scalar(-sys.alpha(n));
  a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = u + Scalar(sys.alpha(n));
  return a;
}

template <typename Scalar>
Scalar cofactor_det(const std::vector<std::vector<Scalar>>& a) {
  const size_t n = a.size();
  if (n == 1) return a[0][0];
  Scalar det(0);
  Scalar sign(1);
  for (size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Scalar>> minor(n - 1, std::vector<Scalar>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t mc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[r - 1][mc++] = a[r][c];
      }
    }
    det += sign * a[0][col] * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

} // namespace

double brute_force_det(const NondimSystem& sys, double s) {
  if (sys.size() > 8) throw std::invalid_argument("brute_force_det: n > 8 is too costly");
  return cofactor_det(assemble_matrix<double>(sys, s));
}

std::complex<double> brute_force_det(const NondimSystem& sys, std::complex<double> s) {
  if (sys.size() > 8) throw std::invalid_argument("brute_force_det: n > 8 is too costly");
  return cofactor_det(assemble_matrix<std::complex<double>>(sys, s));
}

} // namespace coyote
