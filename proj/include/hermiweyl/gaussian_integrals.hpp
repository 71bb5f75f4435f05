#pragma once

#include <vector>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/polynomial.hpp"
#include "hermiweyl/polynomials.hpp"

namespace hermiweyl {

inline constexpr double kDefaultHalfWidth = 6.0;
inline constexpr int kDefaultQuadOrder = 80;
inline constexpr int kMaxQuadOrder = 256;

/// Exponent h|alpha|^2 + s alpha + eta alpha* + f alpha^2 + g alpha*^2.
struct GaussianIntegralSpec {
  Complex h = -1.0;
  Complex s = 0.0;
  Complex eta = 0.0;
  Complex f = 0.0;
  Complex g = 0.0;

  /// Re(h +- f +- g) < 0 for all four sign choices and the real part of the
  /// quadratic form is negative definite.
  bool converges() const;
  /// Smallest eigenvalue of minus the real part of the quadratic form in (Re, Im).
  double decay_rate() const;
  Complex exponent(Complex alpha) const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(int order);

/// Integral of exp(h|a|^2 + s a + eta a*) d^2a / pi. Requires f = g = 0.
Complex gauss_linear(const GaussianIntegralSpec& spec);

/// Integral of the full quadratic exponent d^2a / pi. The square root of
/// h^2 - 4fg is followed along (t f, t g), t in [0, 1], starting from -h.
Complex gauss_quadratic(const GaussianIntegralSpec& spec);

/// Integral of beta*^k beta^l exp(-h|beta|^2 + s beta + f beta*) d^2beta / pi.
Complex gauss_monomial_hkl(Complex h, Complex s, Complex f, int k, int l, int max_order = kDefaultMaxOrder);

/// Tensor Gauss-Legendre approximation of the integral of f(alpha) d^2alpha / pi
/// over the square [-half_width, half_width]^2.
template <class F>
Complex quad_complex(F&& integrand, double half_width = kDefaultHalfWidth, int order = kDefaultQuadOrder) {
  const QuadratureRule rule = gauss_legendre(order);
  Complex total = 0.0;
  for (int i = 0; i < order; ++i) {
    const double x = half_width * rule.nodes[i];
    Complex row = 0.0;
    for (int j = 0; j < order; ++j) {
      const double y = half_width * rule.nodes[j];
      row += rule.weights[j] * integrand(Complex(x, y));
    }
    total += rule.weights[i] * row;
  }
  return total * (half_width * half_width / 3.14159265358979323846);
}

struct TwohReport {
  Complex lhs;
  Complex rhs;
  double deviation = 0.0;
};

/// Both sides of the Hermite-product Gaussian integral
///   int d^2z/pi H_m(a z*) H_n(b z) exp(-|z - lambda|^2)
///     = sum_l (4ab)^l m! n! / (l! (m-l)! (n-l)!) H_{m-l}(a lambda*) H_{n-l}(b lambda).
TwohReport verify_twoh(int m, int n, Complex lambda, Complex scale_a, Complex scale_b, double half_width = 9.0,
                       int order = 120);

}  // namespace hermiweyl
