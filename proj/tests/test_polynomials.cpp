#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hermiweyl/errors.hpp"
#include "hermiweyl/gaussian_integrals.hpp"
#include "hermiweyl/polynomials.hpp"

using namespace hermiweyl;

namespace {

// n! sum_k (-1)^k (2q)^{n-2k} / (k! (n-2k)!)
RealPolynomial hermite1_oracle(int n) {
  RealPolynomial p(n + 1, 0.0);
  for (int k = 0; 2 * k <= n; ++k) {
    p[n - 2 * k] = (k % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0) * std::pow(2.0, n - 2 * k) /
                   (std::tgamma(k + 1.0) * std::tgamma(n - 2 * k + 1.0));
  }
  return p;
}

// H_{m,n}(x, y) = (-1)^n n! x^{m-n} L_n^{(m-n)}(xy) for m >= n
double hermite2_laguerre_oracle(int m, int n, double x, double y) {
  if (m < n) return hermite2_laguerre_oracle(n, m, y, x);
  return (n % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0) * std::pow(x, m - n) *
         std::assoc_laguerre(static_cast<unsigned>(n), static_cast<unsigned>(m - n), x * y);
}

double max_diff(const RealPolynomial& a, const RealPolynomial& b) {
  double d = 0.0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

double max_abs(const RealPolynomial& a) {
  double m = 0.0;
  for (double c : a) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST_CASE("hermite1_low_orders") {
  CHECK(hermite1(0) == RealPolynomial{1.0});
  CHECK(hermite1(1) == RealPolynomial{0.0, 2.0});
  CHECK(hermite1(2) == RealPolynomial{-2.0, 0.0, 4.0});
}

TEST_CASE("hermite1_matches_explicit_sum") {
  for (int n = 0; n <= 16; ++n) {
    const auto p = hermite1(n);
    CHECK(p.back() == doctest::Approx(std::pow(2.0, n)));
    CHECK(max_diff(p, hermite1_oracle(n)) <= 1e-12 * max_abs(p));
  }
}

TEST_CASE("hermite1_rodrigues_matches_recurrence") {
  CHECK(hermite1_rodrigues(0) == RealPolynomial{1.0});
  CHECK(max_diff(hermite1_rodrigues(1), {0.0, 2.0}) == 0.0);
  CHECK(max_diff(hermite1_rodrigues(3), {0.0, -12.0, 0.0, 8.0}) == 0.0);
  for (int n = 0; n <= 12; ++n) {
    const auto a = hermite1(n);
    CHECK(max_diff(a, hermite1_rodrigues(n)) <= 1e-10 * max_abs(a));
  }
}

TEST_CASE("order_overflow_is_reported") {
  CHECK_THROWS_AS(hermite1(17), OrderOverflowError);
  CHECK_THROWS_AS(hermite2(3, 17), OrderOverflowError);
  CHECK_THROWS_AS(hermite2_generating(-1, 0), OrderOverflowError);
  CHECK_THROWS_AS(legendre(20, 1.0), OrderOverflowError);
  CHECK_NOTHROW(hermite1(20, 24));
  CHECK_THROWS_AS(HermiteIndex(4, 9, 8), OrderOverflowError);
}

TEST_CASE("hermite2_examples") {
  CHECK(max_coefficient_difference(hermite2(0, 0), BivariatePolynomial::constant(1.0)) == 0.0);
  BivariatePolynomial h11 = BivariatePolynomial::monomial(1, 1) - BivariatePolynomial::constant(1.0);
  CHECK(max_coefficient_difference(hermite2(1, 1), h11) == 0.0);
  BivariatePolynomial h21 = BivariatePolynomial::monomial(2, 1) - BivariatePolynomial::monomial(1, 0, 2.0);
  CHECK(max_coefficient_difference(hermite2(2, 1), h21) == 0.0);
  CHECK(max_coefficient_difference(hermite2_generating(1, 0), BivariatePolynomial::monomial(1, 0)) == 0.0);
  CHECK(max_coefficient_difference(hermite2_generating(0, 1), BivariatePolynomial::monomial(0, 1)) == 0.0);
  CHECK(max_coefficient_difference(hermite2_generating(1, 1), h11) <= 1e-15);
  CHECK(max_coefficient_difference(hermite2_differential(1, 0), BivariatePolynomial::monomial(1, 0)) == 0.0);
  CHECK(max_coefficient_difference(hermite2_differential(1, 1), h11) <= 1e-15);
}

TEST_CASE("hermite2_leading_and_degree") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const auto h = hermite2(m, n);
      CHECK(h.degree() == m + n);
      CHECK(h.coefficient(m, n) == Complex(1.0));
    }
  }
}

TEST_CASE("hermite2_matches_laguerre_oracle") {
  const double pts[][2] = {{0.3, 1.1}, {1.7, 0.4}, {-0.8, -0.6}, {-2.0, -1.5}};
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      for (const auto& p : pts) {
        const double expect = hermite2_laguerre_oracle(m, n, p[0], p[1]);
        const Complex got = hermite2(m, n).evaluate(p[0], p[1]);
        CHECK(std::abs(got - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
        CHECK(std::abs(hermite2_value(m, n, p[0], p[1]) - got) <= 1e-9 * std::max(1.0, std::abs(expect)));
      }
    }
  }
}

TEST_CASE("hermite2_three_constructions_agree") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const auto h = hermite2(m, n);
      CHECK(relative_coefficient_difference(hermite2_generating(m, n), h) <= 1e-10);
      CHECK(relative_coefficient_difference(hermite2_differential(m, n), h) <= 1e-10);
    }
  }
}

TEST_CASE("hermite2_parity_and_conjugation") {
  const auto neg = BivariatePolynomial::monomial(1, 0, -1.0);
  const auto neg_conj = BivariatePolynomial::monomial(0, 1, -1.0);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const auto h = hermite2(m, n);
      const auto flipped = h.substitute(neg, neg_conj);
      const Complex sign = (m + n) % 2 ? -1.0 : 1.0;
      CHECK(max_coefficient_difference(flipped, h * sign) <= 1e-12);
      CHECK(max_coefficient_difference(h.conj_swap(), hermite2(n, m)) <= 1e-12);
    }
  }
}

TEST_CASE("hermite2_recurrence_in_first_index") {
  const auto alpha = BivariatePolynomial::monomial(1, 0);
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      BivariatePolynomial rhs = alpha * hermite2(m, n);
      if (n > 0) rhs -= hermite2(m, n - 1) * Complex(n);
      CHECK(relative_coefficient_difference(rhs, hermite2(m + 1, n)) <= 1e-12);
    }
  }
}

TEST_CASE("legendre_values") {
  CHECK(legendre(0, 3.7) == 1.0);
  for (int n = 0; n <= 16; ++n) CHECK(legendre(n, 1.0) == doctest::Approx(1.0));
  CHECK(legendre(2, 1.5) == doctest::Approx(2.875));
  CHECK(legendre(5, 0.3) == doctest::Approx(std::legendre(5, 0.3)).epsilon(1e-13));
  CHECK(legendre(7, -0.9) == doctest::Approx(std::legendre(7, -0.9)).epsilon(1e-13));
}

TEST_CASE("gauss_weighted_derivative_examples") {
  const GaussianQuadraticForm zero{};
  const GaussianQuadraticForm modulus{1.0, 0.0, 0.0};
  CHECK(max_coefficient_difference(gauss_weighted_derivative(BivariatePolynomial::constant(1.0), zero, 0, 0),
                                   BivariatePolynomial::constant(1.0)) == 0.0);
  CHECK(gauss_weighted_derivative(BivariatePolynomial::constant(1.0), zero, 2, 1).is_zero());
  CHECK(max_coefficient_difference(gauss_weighted_derivative(BivariatePolynomial::constant(1.0), modulus, 1, 0),
                                   BivariatePolynomial::monomial(0, 1, -1.0)) == 0.0);
  const auto q = gauss_weighted_derivative(BivariatePolynomial::constant(1.0), modulus, 1, 1);
  CHECK(max_coefficient_difference(q, hermite2(1, 1)) <= 1e-15);
}

TEST_CASE("gauss_weighted_derivative_order_is_immaterial") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const GaussianQuadraticForm g{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    BivariatePolynomial p = BivariatePolynomial::constant({u(rng), u(rng)});
    p.set_coefficient(1, 2, {u(rng), u(rng)});
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const auto a = gauss_weighted_derivative(p, g, m, n);
        const auto b = gauss_weighted_derivative_conj_first(p, g, m, n);
        CHECK(relative_coefficient_difference(a, b) <= 1e-12);
      }
    }
  }
}

TEST_CASE("gauss_weighted_derivative_matches_finite_differences") {
  // Central differences of p e^{-G} along Re and Im of alpha.
  const GaussianQuadraticForm g{{0.8, 0.1}, {0.2, -0.3}, {0.25, 0.1}};
  const auto full = [&](Complex a) { return std::exp(-g(a)); };
  const Complex a0(0.3, -0.2);
  const double h = 1e-4;
  // d/dalpha = (d/dx - i d/dy) / 2, d/dalpha* = (d/dx + i d/dy) / 2
  const Complex dx = (full(a0 + h) - full(a0 - h)) / (2 * h);
  const Complex dy = (full(a0 + Complex(0, h)) - full(a0 - Complex(0, h))) / (2 * h);
  const Complex d_alpha = 0.5 * (dx - Complex(0, 1) * dy);
  const Complex d_conj = 0.5 * (dx + Complex(0, 1) * dy);
  const auto one = BivariatePolynomial::constant(1.0);
  CHECK(std::abs(gauss_weighted_derivative(one, g, 1, 0)(a0) * full(a0) - d_alpha) < 1e-7);
  CHECK(std::abs(gauss_weighted_derivative(one, g, 0, 1)(a0) * full(a0) - d_conj) < 1e-7);
}

TEST_CASE("polynomial_arithmetic_properties") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto random_poly = [&]() {
    BivariatePolynomial p;
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; i + j <= 3; ++j) p.set_coefficient(i, j, {u(rng), u(rng)});
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_poly();
    const auto b = random_poly();
    const auto c = random_poly();
    CHECK(relative_coefficient_difference(a + b, b + a) <= 1e-12);
    CHECK(relative_coefficient_difference(a * b, b * a) <= 1e-12);
    CHECK(relative_coefficient_difference((a * b) * c, a * (b * c)) <= 1e-12);
    CHECK(relative_coefficient_difference(a * (b + c), a * b + a * c) <= 1e-12);
    CHECK((a * b).degree() == a.degree() + b.degree());
    const Complex z(u(rng), u(rng));
    CHECK(std::abs((a * b)(z) - a(z) * b(z)) <= 1e-12);
  }
}

TEST_CASE("polynomial_prunes_small_terms") {
  BivariatePolynomial p = BivariatePolynomial::monomial(2, 0, 1.0);
  p.set_coefficient(1, 1, 1e-15);
  CHECK(p.terms().size() == 1);
  p -= BivariatePolynomial::monomial(2, 0, 1.0);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
}

TEST_CASE("hermite2_orthogonality_by_quadrature") {
  const double r2 = std::sqrt(2.0);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (int mp = 0; mp <= 5; ++mp) {
        for (int np = 0; np <= 5; ++np) {
          const Complex v = 2.0 * quad_complex([&](Complex xi) {
            const Complex x = r2 * xi;
            const Complex y = std::conj(x);
            return std::exp(-2.0 * std::norm(xi)) * hermite2_value(m, n, x, y) *
                   std::conj(hermite2_value(mp, np, x, y));
          });
          const double expect = (m == mp && n == np) ? std::sqrt(factorial(m) * factorial(n) * factorial(mp) *
                                                                 factorial(np))
                                                     : 0.0;
          CHECK(std::abs(v - expect) < 1e-6);
        }
      }
    }
  }
}
