#pragma once

#include <compare>
#include <complex>
#include <map>
#include <vector>

namespace hermiweyl {

using Complex = std::complex<double>;

/// Real polynomial in one variable, coefficients in ascending powers.
using RealPolynomial = std::vector<double>;

/// z^k by repeated multiplication; ipow(0, 0) == 1.
Complex ipow(Complex z, int k);
double ipow(double x, int k);

double evaluate(const RealPolynomial& p, double x);
Complex evaluate(const RealPolynomial& p, Complex x);

/// Exponent pair (power of alpha, power of conj(alpha)).
struct Exponent {
  int i = 0;
  int j = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Finite complex polynomial in the pair (alpha, alpha*), treated as two
/// independent variables. Coefficients with magnitude <= prune_epsilon are
/// dropped after every arithmetic operation.
class BivariatePolynomial {
 public:
  static constexpr double kDefaultPruneEpsilon = 1e-14;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(double prune_epsilon);

  static BivariatePolynomial constant(Complex c);
  static BivariatePolynomial monomial(int i, int j, Complex c = 1.0);
  /// c_alpha * alpha + c_conj * alpha*
  static BivariatePolynomial linear(Complex c_alpha, Complex c_conj);

  const std::map<Exponent, Complex>& terms() const { return terms_; }
  double prune_epsilon() const { return prune_epsilon_; }
  Complex coefficient(int i, int j) const;
  void set_coefficient(int i, int j, Complex c);

  /// Highest total degree i + j of a stored term, -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coefficient() const;

  /// Evaluates with the second variable bound to conj(alpha).
  Complex operator()(Complex alpha) const;
  /// Evaluates with both variables independent.
  Complex evaluate(Complex x, Complex y) const;

  BivariatePolynomial derivative_alpha() const;
  BivariatePolynomial derivative_conj() const;

  /// Conjugates every coefficient and swaps alpha <-> alpha*; for the
  /// function alpha -> p(alpha, alpha*) this is pointwise complex conjugation.
  BivariatePolynomial conj_swap() const;

  /// Substitutes alpha -> x, alpha* -> y.
  BivariatePolynomial substitute(const BivariatePolynomial& x, const BivariatePolynomial& y) const;

  BivariatePolynomial pow(int exponent) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(Complex s);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, Complex s) { return a *= s; }
  friend BivariatePolynomial operator*(Complex s, BivariatePolynomial a) { return a *= s; }
  BivariatePolynomial operator-() const;

 private:
  void prune();

  std::map<Exponent, Complex> terms_;
  double prune_epsilon_ = kDefaultPruneEpsilon;
};

/// Largest |a_ij - b_ij| over the union of both supports.
double max_coefficient_difference(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// max |a_ij - b_ij| / max(1, max |b_ij|).
double relative_coefficient_difference(const BivariatePolynomial& a, const BivariatePolynomial& b);

/// Composes a univariate polynomial with a bivariate argument, p(z(alpha, alpha*)).
BivariatePolynomial compose(const RealPolynomial& p, const BivariatePolynomial& z);

}  // namespace hermiweyl
