#include "hermiweyl/weyl_transform.hpp"

#include <cmath>
#include <string>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/gaussian_integrals.hpp"

namespace hermiweyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_dim(int dim) {
  if (dim < 2) throw DimensionError("dimension must be at least 2, got " + std::to_string(dim));
}

// 2 pi sum_jk opw_jk Delta_kj
Complex weighted_trace(const Matrix& opw, Complex alpha) {
  return 2.0 * kPi * opw.cwiseProduct(wigner_operator(alpha, static_cast<int>(opw.rows())).entries.transpose()).sum();
}

}  // namespace

Matrix displacement(Complex beta, int dim) {
  check_dim(dim);
  if (beta == 0.0) return Matrix::Identity(dim, dim);
  // <n+k|D|n> = g_n^(k) e^{ik arg beta}, g_n^(k) = sqrt(n!/(n+k)!) e^{-x/2} |beta|^k L_n^(k)(x), x = |beta|^2,
  // from the symmetric three-term recurrence of the normalised Laguerre functions
  const double x = std::norm(beta);
  const double log_b = std::log(std::abs(beta));
  const double phase = std::arg(beta);
  std::vector<double> root(dim + 1);
  std::vector<double> inv_root(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    root[i] = std::sqrt(static_cast<double>(i));
    inv_root[i] = i > 0 ? 1.0 / root[i] : 0.0;
  }
  Matrix d(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const Complex lower = std::polar(1.0, k * phase);
    const Complex upper = std::polar(k % 2 ? -1.0 : 1.0, -k * phase);
    double prev = 0.0;
    double cur = std::exp(-0.5 * x + k * log_b - 0.5 * std::lgamma(k + 1.0));
    for (int n = 0; n + k < dim; ++n) {
      d(n + k, n) = cur * lower;
      if (k > 0) d(n, n + k) = cur * upper;
      const double next =
          ((2.0 * n + 1.0 + k - x) * cur - root[n] * root[n + k] * prev) * inv_root[n + 1] * inv_root[n + k + 1];
      prev = cur;
      cur = next;
    }
  }
  return d;
}

FockOperator wigner_operator(Complex alpha, int dim) {
  Matrix d = displacement(2.0 * alpha, dim);
  for (int k = 1; k < dim; k += 2) d.col(k) = -d.col(k);
  return FockOperator(d / kPi);
}

int resolve_taper(int dim, int taper) {
  if (taper == kAutoTaper) return dim / 2;
  if (taper < 0 || taper >= dim) {
    throw ParameterError("taper must lie in [0, dim), got " + std::to_string(taper));
  }
  return taper;
}

Matrix taper_weights(int dim, int taper) {
  check_dim(dim);
  const int p = resolve_taper(dim, taper);
  std::vector<double> cdf(p + 1);
  double pmf = std::ldexp(1.0, -p);
  double acc = 0.0;
  for (int k = 0; k <= p; ++k) {
    acc += pmf;
    cdf[k] = acc;
    pmf *= static_cast<double>(p - k) / (k + 1.0);
  }
  cdf[p] = 1.0;
  Matrix w(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      const int x = dim - 1 - std::max(j, k);
      w(j, k) = x >= p ? 1.0 : cdf[x];
    }
  }
  return w;
}

Complex weyl_symbol(const FockOperator& op, Complex alpha, int taper) {
  const int p = resolve_taper(op.dim(), taper);
  if (p == 0) return weighted_trace(op.entries, alpha);
  return weighted_trace(op.entries.cwiseProduct(taper_weights(op.dim(), p)), alpha);
}

CoherentKernel::CoherentKernel(const FockOperator& op, int taper, double half_width, int order) {
  const int dim = op.dim();
  const Matrix opw = op.entries.cwiseProduct(taper_weights(dim, taper));
  const QuadratureRule rule = gauss_legendre(order);
  coords_.resize(order);
  for (int i = 0; i < order; ++i) coords_[i] = half_width * rule.nodes[i];
  values_.resize(static_cast<std::size_t>(order) * order);
  const double scale = half_width * half_width / kPi;
  Vector left(dim);
  Vector right(dim);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const Complex beta(coords_[i], coords_[j]);
      // left_k = <-beta|k>, right_k = <k|beta>
      Complex l = std::exp(-0.5 * std::norm(beta));
      Complex r = l;
      for (int k = 0; k < dim; ++k) {
        left(k) = l;
        right(k) = r;
        const double s = std::sqrt(k + 1.0);
        l *= -std::conj(beta) / s;
        r *= beta / s;
      }
      values_[static_cast<std::size_t>(i) * order + j] =
          scale * rule.weights[i] * rule.weights[j] * left.transpose() * opw * right;
    }
  }
}

Complex CoherentKernel::operator()(Complex alpha) const {
  // 2(alpha beta* - alpha* beta) = 4i (Im(alpha) x - Re(alpha) y) for beta = x + iy
  const std::size_t order = coords_.size();
  std::vector<Complex> py(order);
  for (std::size_t j = 0; j < order; ++j) py[j] = std::polar(1.0, -4.0 * alpha.real() * coords_[j]);
  Complex total = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    Complex row = 0.0;
    const Complex* v = &values_[i * order];
    for (std::size_t j = 0; j < order; ++j) row += v[j] * py[j];
    total += row * std::polar(1.0, 4.0 * alpha.imag() * coords_[i]);
  }
  return kCoherentCalibration * std::exp(2.0 * std::norm(alpha)) * total;
}

Complex weyl_symbol_coherent(const FockOperator& op, Complex alpha, int taper) {
  const Complex value = CoherentKernel(op, taper)(alpha);
  const Complex trace = weyl_symbol(op, alpha, taper);
  if (std::abs(value - trace) > 1e-4) {
    throw QuadratureError("coherent-kernel and trace routes disagree by " + std::to_string(std::abs(value - trace)));
  }
  return value;
}

Complex WeylSymbol::exact(Complex alpha) const {
  if (!polynomial_part) throw ParameterError("symbol has no exact form");
  const GaussianQuadraticForm g = gaussian_part.value_or(GaussianQuadraticForm{});
  return (*polynomial_part)(alpha) * std::exp(-g(alpha));
}

WeylSymbol WeylSymbol::from_function(std::function<Complex(Complex)> f) {
  return WeylSymbol{std::move(f), {}, {}, {}};
}

WeylSymbol WeylSymbol::from_exact(BivariatePolynomial p, GaussianQuadraticForm g) {
  WeylSymbol s{nullptr, std::move(p), g, {}};
  s.evaluator = [poly = *s.polynomial_part, g](Complex alpha) { return poly(alpha) * std::exp(-g(alpha)); };
  return s;
}

WeylSymbol WeylSymbol::of_operator(FockOperator op, int taper) {
  WeylSymbol s = from_function(nullptr);
  s.tapered_operator = op.entries.cwiseProduct(taper_weights(op.dim(), taper));
  s.evaluator = [opw = *s.tapered_operator](Complex alpha) { return weighted_trace(opw, alpha); };
  return s;
}

FockOperator weyl_quantize(const WeylSymbol& symbol, int dim, double half_width, int order) {
  check_dim(dim);
  if (symbol.gaussian_part) {
    const auto& g = *symbol.gaussian_part;
    const GaussianIntegralSpec spec{-g.a, 0.0, 0.0, -g.b, -g.c};
    const bool constant = g.a == 0.0 && g.b == 0.0 && g.c == 0.0;
    if (!constant && !spec.converges()) throw DivergenceError("weyl_quantize: symbol Gaussian does not decay");
  }
  const QuadratureRule rule = gauss_legendre(order);
  Matrix out = Matrix::Zero(dim, dim);
  if (order % 2) {
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        const Complex alpha(half_width * rule.nodes[i], half_width * rule.nodes[j]);
        const Complex f = symbol(alpha);
        if (f != 0.0) out += (rule.weights[i] * rule.weights[j] * f) * wigner_operator(alpha, dim).entries;
      }
    }
  } else {
    // Delta(alpha*) = conj Delta(alpha) and Delta(-alpha)_jk = (-1)^{j-k} Delta(alpha)_jk on the mirrored nodes
    Matrix odd = Matrix::Zero(dim, dim);
    const int half = order / 2;
    const bool reuse = symbol.tapered_operator && symbol.tapered_operator->rows() == dim;
    Matrix sign(dim, dim);
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) sign(j, k) = (j + k) % 2 ? -1.0 : 1.0;
    }
    for (int i = 0; i < half; ++i) {
      for (int j = 0; j < half; ++j) {
        const Complex alpha(half_width * rule.nodes[i], half_width * rule.nodes[j]);
        const double w = rule.weights[i] * rule.weights[j];
        const Matrix delta = wigner_operator(alpha, dim).entries;
        Complex f1;
        Complex f2;
        Complex f3;
        Complex f4;
        if (reuse) {
          const Matrix& opw = *symbol.tapered_operator;
          const Complex even = 2.0 * kPi * opw.cwiseProduct(delta.transpose()).sum();
          const Complex even_c = 2.0 * kPi * opw.cwiseProduct(delta.transpose().conjugate()).sum();
          const Complex odd_part = 2.0 * kPi * opw.cwiseProduct(sign).cwiseProduct(delta.transpose()).sum();
          const Complex odd_c = 2.0 * kPi * opw.cwiseProduct(sign).cwiseProduct(delta.transpose().conjugate()).sum();
          f1 = w * even;
          f2 = w * odd_part;
          f3 = w * even_c;
          f4 = w * odd_c;
        } else {
          f1 = w * symbol(alpha);
          f2 = w * symbol(-alpha);
          f3 = w * symbol(std::conj(alpha));
          f4 = w * symbol(-std::conj(alpha));
        }
        out += f1 * delta + f3 * delta.conjugate();
        odd += f2 * delta + f4 * delta.conjugate();
      }
    }
    out += odd.cwiseProduct(sign);
  }
  // 2 int d^2alpha = 2 pi int d^2alpha / pi
  return FockOperator(2.0 * half_width * half_width * out);
}

Complex normal_to_weyl_series(const NormalCoefficients& coeffs, Complex alpha) {
  const double r2 = std::sqrt(2.0);
  Complex total = 0.0;
  for (const auto& [key, c] : coeffs) {
    const auto [m, n] = key;
    total += c * std::pow(2.0, -0.5 * (m + n)) * hermite2_value(m, n, r2 * std::conj(alpha), r2 * alpha);
  }
  return total;
}

WeylSymbol projector_weyl_symbol(int m, int n, int max_order) {
  check_order(m, max_order, "projector_weyl_symbol");
  check_order(n, max_order, "projector_weyl_symbol");
  // H_{m,n}(2 alpha*, 2 alpha) has alpha*^m alpha^n as its leading term
  BivariatePolynomial p = hermite2_of(m, n, BivariatePolynomial::linear(0.0, 2.0), BivariatePolynomial::linear(2.0, 0.0));
  p *= 2.0 / std::sqrt(factorial(m) * factorial(n));
  return WeylSymbol::from_exact(std::move(p), GaussianQuadraticForm{2.0, 0.0, 0.0});
}

}  // namespace hermiweyl
