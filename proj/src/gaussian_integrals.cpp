#include "hermiweyl/gaussian_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hermiweyl {

bool GaussianIntegralSpec::converges() const {
  for (int sf : {-1, 1}) {
    for (int sg : {-1, 1}) {
      if ((h + double(sf) * f + double(sg) * g).real() >= 0.0) return false;
    }
  }
  // Re of the exponent in (x, y): [[Re h + Re(f+g), -Im(f-g)], [-Im(f-g), Re h - Re(f+g)]]
  const double p = h.real() + (f + g).real();
  const double q = h.real() - (f + g).real();
  const double c = -(f - g).imag();
  return p < 0.0 && q < 0.0 && p * q - c * c > 0.0;
}

double GaussianIntegralSpec::decay_rate() const {
  const double p = -(h.real() + (f + g).real());
  const double q = -(h.real() - (f + g).real());
  const double c = (f - g).imag();
  return 0.5 * (p + q) - std::sqrt(0.25 * (p - q) * (p - q) + c * c);
}

Complex GaussianIntegralSpec::exponent(Complex alpha) const {
  const Complex ac = std::conj(alpha);
  return h * alpha * ac + s * alpha + eta * ac + f * alpha * alpha + g * ac * ac;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > kMaxQuadOrder) {
    throw QuadratureError("gauss_legendre: order " + std::to_string(order) + " outside [1, " +
                          std::to_string(kMaxQuadOrder) + "]");
  }
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

Complex gauss_linear(const GaussianIntegralSpec& spec) {
  if (spec.f != 0.0 || spec.g != 0.0) throw ParameterError("gauss_linear: requires f = g = 0");
  if (spec.h.real() >= 0.0) throw DivergenceError("gauss_linear: Re(h) must be negative");
  return -1.0 / spec.h * std::exp(-spec.s * spec.eta / spec.h);
}

Complex gauss_quadratic(const GaussianIntegralSpec& spec) {
  if (!spec.converges()) throw DivergenceError("gauss_quadratic: exponent is not negative definite");
  const Complex h = spec.h;
  const Complex fg = spec.f * spec.g;
  constexpr int kSteps = 512;
  Complex root = -h;
  for (int k = 1; k <= kSteps; ++k) {
    const double t = static_cast<double>(k) / kSteps;
    const Complex d = h * h - 4.0 * t * t * fg;
    if (std::abs(d) < 1e-14 * std::max(1.0, std::norm(h))) {
      throw BranchError("gauss_quadratic: h^2 - 4fg vanishes along the continuation path");
    }
    const Complex r = std::sqrt(d);
    const Complex next = std::abs(r - root) <= std::abs(r + root) ? r : -r;
    if (std::abs(next - root) > 0.5 * std::abs(root)) {
      throw BranchError("gauss_quadratic: square root jumped during continuation");
    }
    root = next;
  }
  const Complex disc = h * h - 4.0 * fg;
  const Complex num = -h * spec.s * spec.eta + spec.s * spec.s * spec.g + spec.eta * spec.eta * spec.f;
  return std::exp(num / disc) / root;
}

Complex gauss_monomial_hkl(Complex h, Complex s, Complex f, int k, int l, int max_order) {
  check_order(k, max_order, "gauss_monomial_hkl");
  check_order(l, max_order, "gauss_monomial_hkl");
  if (h.real() <= 0.0) throw DivergenceError("gauss_monomial_hkl: Re(h) must be positive");
  // The half-integer powers of h cancel term by term.
  Complex sum = 0.0;
  for (int j = 0; j <= std::min(k, l); ++j) {
    const double c = factorial(k) * factorial(l) / (factorial(j) * factorial(k - j) * factorial(l - j));
    sum += c * ipow(s, k - j) * ipow(f, l - j) * ipow(1.0 / h, k + l + 1 - j);
  }
  return std::exp(s * f / h) * sum;
}

TwohReport verify_twoh(int m, int n, Complex lambda, Complex scale_a, Complex scale_b, double half_width,
                       int order) {
  check_order(m, kDefaultMaxOrder, "verify_twoh");
  check_order(n, kDefaultMaxOrder, "verify_twoh");
  TwohReport report;
  const Complex lc = std::conj(lambda);
  report.lhs = quad_complex(
      [&](Complex w) {
        return hermite1_value(m, scale_a * (lc + std::conj(w))) * hermite1_value(n, scale_b * (lambda + w)) *
               std::exp(-std::norm(w));
      },
      half_width, order);
  for (int l = 0; l <= std::min(m, n); ++l) {
    const double c = factorial(m) * factorial(n) / (factorial(l) * factorial(m - l) * factorial(n - l));
    report.rhs += c * ipow(4.0 * scale_a * scale_b, l) * hermite1_value(m - l, scale_a * lc) *
                  hermite1_value(n - l, scale_b * lambda);
  }
  report.deviation = std::abs(report.lhs - report.rhs);
  return report;
}

}  // namespace hermiweyl
