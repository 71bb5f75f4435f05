#include "hermiweyl/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace hermiweyl {

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

double evaluate(const RealPolynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex evaluate(const RealPolynomial& p, Complex x) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BivariatePolynomial::BivariatePolynomial(double prune_epsilon) : prune_epsilon_(prune_epsilon) {}

BivariatePolynomial BivariatePolynomial::constant(Complex c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, Complex c) {
  BivariatePolynomial p;
  p.set_coefficient(i, j, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::linear(Complex c_alpha, Complex c_conj) {
  BivariatePolynomial p;
  p.set_coefficient(1, 0, c_alpha);
  p.set_coefficient(0, 1, c_conj);
  return p;
}

Complex BivariatePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Complex{} : it->second;
}

void BivariatePolynomial::set_coefficient(int i, int j, Complex c) {
  if (std::abs(c) <= prune_epsilon_) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = c;
  }
}

int BivariatePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
  return d;
}

double BivariatePolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex BivariatePolynomial::operator()(Complex alpha) const { return evaluate(alpha, std::conj(alpha)); }

Complex BivariatePolynomial::evaluate(Complex x, Complex y) const {
  Complex acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c * ipow(x, e.i) * ipow(y, e.j);
  return acc;
}

BivariatePolynomial BivariatePolynomial::derivative_alpha() const {
  BivariatePolynomial out(prune_epsilon_);
  for (const auto& [e, c] : terms_) {
    if (e.i > 0) out.terms_[{e.i - 1, e.j}] += c * static_cast<double>(e.i);
  }
  out.prune();
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_conj() const {
  BivariatePolynomial out(prune_epsilon_);
  for (const auto& [e, c] : terms_) {
    if (e.j > 0) out.terms_[{e.i, e.j - 1}] += c * static_cast<double>(e.j);
  }
  out.prune();
  return out;
}

BivariatePolynomial BivariatePolynomial::conj_swap() const {
  BivariatePolynomial out(prune_epsilon_);
  for (const auto& [e, c] : terms_) out.terms_[{e.j, e.i}] = std::conj(c);
  return out;
}

BivariatePolynomial BivariatePolynomial::substitute(const BivariatePolynomial& x,
                                                    const BivariatePolynomial& y) const {
  BivariatePolynomial out(prune_epsilon_);
  int max_i = 0;
  int max_j = 0;
  for (const auto& [e, c] : terms_) {
    max_i = std::max(max_i, e.i);
    max_j = std::max(max_j, e.j);
  }
  std::vector<BivariatePolynomial> xp{constant(1.0)};
  std::vector<BivariatePolynomial> yp{constant(1.0)};
  for (int k = 1; k <= max_i; ++k) xp.push_back(xp.back() * x);
  for (int k = 1; k <= max_j; ++k) yp.push_back(yp.back() * y);
  for (const auto& [e, c] : terms_) out += xp[e.i] * yp[e.j] * c;
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(int exponent) const {
  BivariatePolynomial out = constant(1.0);
  for (int k = 0; k < exponent; ++k) out *= *this;
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  prune();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] -= c;
  prune();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& other) {
  std::map<Exponent, Complex> product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) product[{ea.i + eb.i, ea.j + eb.j}] += ca * cb;
  }
  terms_ = std::move(product);
  prune();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(Complex s) {
  for (auto& [e, c] : terms_) c *= s;
  prune();
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void BivariatePolynomial::prune() {
  std::erase_if(terms_, [this](const auto& kv) { return std::abs(kv.second) <= prune_epsilon_; });
}

double max_coefficient_difference(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(e.i, e.j)));
  for (const auto& [e, c] : b.terms()) m = std::max(m, std::abs(a.coefficient(e.i, e.j) - c));
  return m;
}

double relative_coefficient_difference(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return max_coefficient_difference(a, b) / std::max(1.0, b.max_abs_coefficient());
}

BivariatePolynomial compose(const RealPolynomial& p, const BivariatePolynomial& z) {
  BivariatePolynomial acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= z;
    acc += BivariatePolynomial::constant(*it);
  }
  return acc;
}

}  // namespace hermiweyl
