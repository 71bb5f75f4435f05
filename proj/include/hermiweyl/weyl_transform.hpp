#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hermiweyl/fock_space.hpp"
#include "hermiweyl/polynomials.hpp"

namespace hermiweyl {

inline constexpr int kAutoTaper = -1;
inline constexpr double kCoherentCalibration = 2.0;
inline constexpr double kKernelHalfWidth = 14.0;
inline constexpr int kKernelOrder = 256;
inline constexpr double kQuantizeHalfWidth = 10.0;
inline constexpr int kQuantizeOrder = 240;

/// D(beta) = exp(beta a^dagger - beta* a), entries of the untruncated operator.
Matrix displacement(Complex beta, int dim);

/// Delta(alpha) = (1/pi) D(2 alpha) (-1)^{a^dagger a}.
FockOperator wigner_operator(Complex alpha, int dim);

/// Number of binomial smoothing steps used by weyl_symbol: dim / 2 for kAutoTaper.
int resolve_taper(int dim, int taper);

/// w_jk = P(X <= dim - 1 - max(j, k)) for X ~ Binomial(taper, 1/2). All ones for taper 0.
Matrix taper_weights(int dim, int taper = kAutoTaper);

/// 2 pi sum_jk w_jk op_jk Delta_kj(alpha). With taper 0 this is the plain trace 2 pi Tr[op Delta].
Complex weyl_symbol(const FockOperator& op, Complex alpha, int taper = kAutoTaper);

/// Caches <-beta| op_w |beta> on a Gauss-Legendre grid so that the coherent-state
/// route K e^{2|alpha|^2} int d^2beta/pi <-beta|op_w|beta> e^{2(alpha beta* - alpha* beta)}
/// costs one pass over the grid per alpha.
class CoherentKernel {
 public:
  explicit CoherentKernel(const FockOperator& op, int taper = kAutoTaper, double half_width = kKernelHalfWidth,
                          int order = kKernelOrder);

  Complex operator()(Complex alpha) const;

 private:
  std::vector<double> coords_;
  std::vector<Complex> values_;  // weight-scaled kernel, row-major over (x, y)
};

/// Coherent-kernel route with K = 2. Throws QuadratureError when it differs from
/// weyl_symbol by more than 1e-4.
Complex weyl_symbol_coherent(const FockOperator& op, Complex alpha, int taper = kAutoTaper);

/// Classical function of alpha, optionally with exact form P(alpha, alpha*) e^{-G}.
struct WeylSymbol {
  std::function<Complex(Complex)> evaluator;
  std::optional<BivariatePolynomial> polynomial_part;
  std::optional<GaussianQuadraticForm> gaussian_part;
  /// Tapered operator matrix when the symbol was taken from an operator.
  std::optional<Matrix> tapered_operator;

  Complex operator()(Complex alpha) const { return evaluator(alpha); }
  bool has_exact_form() const { return polynomial_part.has_value(); }
  Complex exact(Complex alpha) const;

  static WeylSymbol from_function(std::function<Complex(Complex)> f);
  static WeylSymbol from_exact(BivariatePolynomial p, GaussianQuadraticForm g = {});
  /// alpha -> weyl_symbol(op, alpha, taper).
  static WeylSymbol of_operator(FockOperator op, int taper = kAutoTaper);
};

/// 2 int d^2alpha f(alpha) Delta(alpha) by tensor Gauss-Legendre quadrature.
/// Throws DivergenceError for an exact form whose Gaussian grows.
FockOperator weyl_quantize(const WeylSymbol& symbol, int dim, double half_width = kQuantizeHalfWidth,
                           int order = kQuantizeOrder);

/// Keys are (power of a^dagger, power of a) of the normally ordered monomials.
using NormalCoefficients = std::map<std::pair<int, int>, Complex>;

/// sum c_mn 2^{-(m+n)/2} H_{m,n}(sqrt2 alpha*, sqrt2 alpha).
Complex normal_to_weyl_series(const NormalCoefficients& coeffs, Complex alpha);

/// Symbol of |m><n|: (2 / sqrt(m! n!)) H_{m,n}(2 alpha*, 2 alpha) e^{-2|alpha|^2}.
WeylSymbol projector_weyl_symbol(int m, int n, int max_order = 8);

}  // namespace hermiweyl
