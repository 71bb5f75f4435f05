#pragma once

#include "hermiweyl/polynomial.hpp"

namespace hermiweyl {

inline constexpr int kDefaultMaxOrder = 16;

/// Pair of Hermite indices; validated against a maximum order on construction.
struct HermiteIndex {
  int m = 0;
  int n = 0;
  HermiteIndex(int m_, int n_, int max_order = kDefaultMaxOrder);
};

/// Throws OrderOverflowError unless 0 <= order <= max_order.
void check_order(int order, int max_order, const char* what);

/// Gaussian exponent G = a|alpha|^2 + b alpha^2 + c alpha*^2, used as exp(-G).
struct GaussianQuadraticForm {
  Complex a = 0.0;
  Complex b = 0.0;
  Complex c = 0.0;

  Complex operator()(Complex alpha) const;
  Complex evaluate(Complex x, Complex y) const;
  /// dG/dalpha = a alpha* + 2 b alpha
  BivariatePolynomial gradient_alpha() const;
  /// dG/dalpha* = a alpha + 2 c alpha*
  BivariatePolynomial gradient_conj() const;
};

/// Physicists' Hermite polynomial H_n(q) from the three-term recurrence.
RealPolynomial hermite1(int n, int max_order = kDefaultMaxOrder);

/// H_n(q) as (-1)^n e^{q^2} d^n/dq^n e^{-q^2}, by repeated differentiation
/// of the polynomial prefactor.
RealPolynomial hermite1_rodrigues(int n, int max_order = kDefaultMaxOrder);

/// Two-variable Hermite polynomial H_{m,n}(alpha, alpha*) from its finite sum.
BivariatePolynomial hermite2(int m, int n, int max_order = kDefaultMaxOrder);

/// H_{m,n} as m! n! [t^m tau^n] exp(-t tau + t alpha + tau alpha*), using
/// truncated double-series arithmetic.
BivariatePolynomial hermite2_generating(int m, int n, int max_order = kDefaultMaxOrder);

/// H_{m,n} as (-1)^{m-n} e^{|alpha|^2} d^m/dalpha*^m d^n/dalpha^n e^{-|alpha|^2}.
BivariatePolynomial hermite2_differential(int m, int n, int max_order = kDefaultMaxOrder);

/// Legendre polynomial P_n(x) by Bonnet's recurrence.
double legendre(int n, double x, int max_order = kDefaultMaxOrder);

/// Returns Q with d^m/dalpha^m d^n/dalpha*^n (p e^{-G}) = Q e^{-G}.
/// All alpha derivatives are taken first, then the alpha* ones.
BivariatePolynomial gauss_weighted_derivative(const BivariatePolynomial& p, const GaussianQuadraticForm& g,
                                              int m, int n, int max_order = kDefaultMaxOrder);

/// Same as gauss_weighted_derivative but differentiates alpha* first.
BivariatePolynomial gauss_weighted_derivative_conj_first(const BivariatePolynomial& p,
                                                         const GaussianQuadraticForm& g, int m, int n,
                                                         int max_order = kDefaultMaxOrder);

/// H_n(z) for a polynomial argument z.
BivariatePolynomial hermite1_of(int n, const BivariatePolynomial& z);

/// H_{m,n}(x, y) for polynomial arguments x, y.
BivariatePolynomial hermite2_of(int m, int n, const BivariatePolynomial& x, const BivariatePolynomial& y);

/// Evaluates H_n at a complex point.
Complex hermite1_value(int n, Complex z);

/// Evaluates H_{m,n}(x, y) at independent complex points.
Complex hermite2_value(int m, int n, Complex x, Complex y);

double factorial(int n);
double binomial(int n, int k);

}  // namespace hermiweyl
