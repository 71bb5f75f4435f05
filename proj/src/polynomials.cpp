#include "hermiweyl/polynomials.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hermiweyl/errors.hpp"

namespace hermiweyl {

void check_order(int order, int max_order, const char* what) {
  if (order < 0 || order > max_order) {
    throw OrderOverflowError(std::string(what) + ": order " + std::to_string(order) + " outside [0, " +
                             std::to_string(max_order) + "]");
  }
}

HermiteIndex::HermiteIndex(int m_, int n_, int max_order) : m(m_), n(n_) {
  check_order(m, max_order, "HermiteIndex");
  check_order(n, max_order, "HermiteIndex");
}

double factorial(int n) { return std::tgamma(n + 1.0); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Complex GaussianQuadraticForm::operator()(Complex alpha) const { return evaluate(alpha, std::conj(alpha)); }

Complex GaussianQuadraticForm::evaluate(Complex x, Complex y) const { return a * x * y + b * x * x + c * y * y; }

BivariatePolynomial GaussianQuadraticForm::gradient_alpha() const {
  return BivariatePolynomial::linear(2.0 * b, a);
}

BivariatePolynomial GaussianQuadraticForm::gradient_conj() const {
  return BivariatePolynomial::linear(a, 2.0 * c);
}

RealPolynomial hermite1(int n, int max_order) {
  check_order(n, max_order, "hermite1");
  RealPolynomial prev{1.0};
  if (n == 0) return prev;
  RealPolynomial cur{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    // H_{k+1} = 2q H_k - 2k H_{k-1}
    RealPolynomial next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) next[i + 1] += 2.0 * cur[i];
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RealPolynomial hermite1_rodrigues(int n, int max_order) {
  check_order(n, max_order, "hermite1_rodrigues");
  // d/dq (P e^{-q^2}) = (P' - 2q P) e^{-q^2}
  RealPolynomial p{1.0};
  for (int step = 0; step < n; ++step) {
    RealPolynomial next(p.size() + 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) next[i - 1] += static_cast<double>(i) * p[i];
    for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] -= 2.0 * p[i];
    p = std::move(next);
  }
  if (n % 2 == 1) {
    for (double& c : p) c = -c;
  }
  return p;
}

BivariatePolynomial hermite2(int m, int n, int max_order) {
  check_order(m, max_order, "hermite2");
  check_order(n, max_order, "hermite2");
  BivariatePolynomial out;
  for (int l = 0; l <= std::min(m, n); ++l) {
    const double c = factorial(m) * factorial(n) / (factorial(l) * factorial(m - l) * factorial(n - l));
    out.set_coefficient(m - l, n - l, (l % 2 == 0 ? c : -c));
  }
  return out;
}

namespace {

// Power series in (t, tau) truncated at t^M tau^N, coefficients polynomial in (alpha, alpha*).
class DoubleSeries {
 public:
  DoubleSeries(int max_t, int max_tau)
      : max_t_(max_t), max_tau_(max_tau), c_((max_t + 1) * (max_tau + 1)) {}

  BivariatePolynomial& at(int p, int q) { return c_[p * (max_tau_ + 1) + q]; }
  const BivariatePolynomial& at(int p, int q) const { return c_[p * (max_tau_ + 1) + q]; }

  DoubleSeries operator*(const DoubleSeries& o) const {
    DoubleSeries out(max_t_, max_tau_);
    for (int p1 = 0; p1 <= max_t_; ++p1) {
      for (int q1 = 0; q1 <= max_tau_; ++q1) {
        if (at(p1, q1).is_zero()) continue;
        for (int p2 = 0; p1 + p2 <= max_t_; ++p2) {
          for (int q2 = 0; q1 + q2 <= max_tau_; ++q2) {
            if (o.at(p2, q2).is_zero()) continue;
            out.at(p1 + p2, q1 + q2) += at(p1, q1) * o.at(p2, q2);
          }
        }
      }
    }
    return out;
  }

 private:
  int max_t_;
  int max_tau_;
  std::vector<BivariatePolynomial> c_;
};

}  // namespace

BivariatePolynomial hermite2_generating(int m, int n, int max_order) {
  check_order(m, max_order, "hermite2_generating");
  check_order(n, max_order, "hermite2_generating");
  DoubleSeries cross(m, n);
  DoubleSeries along_t(m, n);
  DoubleSeries along_tau(m, n);
  // exp(-t tau), exp(t alpha), exp(tau alpha*)
  for (int k = 0; k <= std::min(m, n); ++k) {
    cross.at(k, k) = BivariatePolynomial::constant((k % 2 == 0 ? 1.0 : -1.0) / factorial(k));
  }
  for (int k = 0; k <= m; ++k) along_t.at(k, 0) = BivariatePolynomial::monomial(k, 0, 1.0 / factorial(k));
  for (int k = 0; k <= n; ++k) along_tau.at(0, k) = BivariatePolynomial::monomial(0, k, 1.0 / factorial(k));
  const DoubleSeries product = cross * along_t * along_tau;
  return product.at(m, n) * Complex(factorial(m) * factorial(n));
}

BivariatePolynomial hermite2_differential(int m, int n, int max_order) {
  check_order(m, max_order, "hermite2_differential");
  check_order(n, max_order, "hermite2_differential");
  const GaussianQuadraticForm modulus{1.0, 0.0, 0.0};
  // n derivatives in alpha, m in alpha*
  BivariatePolynomial q =
      gauss_weighted_derivative(BivariatePolynomial::constant(1.0), modulus, n, m, max_order);
  return (m - n) % 2 == 0 ? q : -q;
}

double legendre(int n, double x, int max_order) {
  check_order(n, max_order, "legendre");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

BivariatePolynomial differentiate_weighted(BivariatePolynomial q, const BivariatePolynomial& grad, bool alpha,
                                           int times) {
  for (int k = 0; k < times; ++k) {
    BivariatePolynomial d = alpha ? q.derivative_alpha() : q.derivative_conj();
    d -= q * grad;
    q = std::move(d);
  }
  return q;
}

}  // namespace

BivariatePolynomial gauss_weighted_derivative(const BivariatePolynomial& p, const GaussianQuadraticForm& g,
                                              int m, int n, int max_order) {
  check_order(m, max_order, "gauss_weighted_derivative");
  check_order(n, max_order, "gauss_weighted_derivative");
  BivariatePolynomial q = differentiate_weighted(p, g.gradient_alpha(), true, m);
  return differentiate_weighted(std::move(q), g.gradient_conj(), false, n);
}

BivariatePolynomial gauss_weighted_derivative_conj_first(const BivariatePolynomial& p,
                                                         const GaussianQuadraticForm& g, int m, int n,
                                                         int max_order) {
  check_order(m, max_order, "gauss_weighted_derivative");
  check_order(n, max_order, "gauss_weighted_derivative");
  BivariatePolynomial q = differentiate_weighted(p, g.gradient_conj(), false, n);
  return differentiate_weighted(std::move(q), g.gradient_alpha(), true, m);
}

BivariatePolynomial hermite1_of(int n, const BivariatePolynomial& z) {
  BivariatePolynomial prev = BivariatePolynomial::constant(1.0);
  if (n == 0) return prev;
  BivariatePolynomial cur = z * 2.0;
  for (int k = 1; k < n; ++k) {
    BivariatePolynomial next = z * cur * 2.0 - prev * Complex(2.0 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BivariatePolynomial hermite2_of(int m, int n, const BivariatePolynomial& x, const BivariatePolynomial& y) {
  BivariatePolynomial out;
  for (int l = 0; l <= std::min(m, n); ++l) {
    const double c = factorial(m) * factorial(n) / (factorial(l) * factorial(m - l) * factorial(n - l));
    out += x.pow(m - l) * y.pow(n - l) * Complex(l % 2 == 0 ? c : -c);
  }
  return out;
}

Complex hermite1_value(int n, Complex z) {
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hermite2_value(int m, int n, Complex x, Complex y) {
  Complex acc = 0.0;
  for (int l = 0; l <= std::min(m, n); ++l) {
    const double c = factorial(m) * factorial(n) / (factorial(l) * factorial(m - l) * factorial(n - l));
    acc += (l % 2 == 0 ? c : -c) * ipow(x, m - l) * ipow(y, n - l);
  }
  return acc;
}

}  // namespace hermiweyl
