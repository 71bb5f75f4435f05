#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/fock_space.hpp"
#include "hermiweyl/gaussian_integrals.hpp"
#include "hermiweyl/identities.hpp"
#include "hermiweyl/polynomials.hpp"
#include "hermiweyl/state_app.hpp"
#include "hermiweyl/weyl_transform.hpp"

using namespace hermiweyl;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSinglePhotonNegativity = 0.66934;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Complex random_point(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

Outcome hermite_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const BivariatePolynomial sum = hermite2(m, n);
      worst = std::max(worst, relative_coefficient_difference(sum, hermite2_generating(m, n)));
      worst = std::max(worst, relative_coefficient_difference(sum, hermite2_differential(m, n)));
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed < 5.0, format("max relative difference %.3g, %.2f s", worst, elapsed)};
}

Outcome orthogonality() {
  const auto start = Clock::now();
  const double r2 = std::sqrt(2.0);
  double worst = 0.0;
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
          const double expect =
              (m == mp && n == np) ? std::sqrt(factorial(m) * factorial(n) * factorial(mp) * factorial(np)) : 0.0;
          worst = std::max(worst, std::abs(v - expect));
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst < 1e-6 && elapsed < 30.0, format("max absolute error %.3g, %.2f s", worst, elapsed)};
}

GaussianIntegralSpec random_convergent_spec(std::mt19937& rng, bool quadratic) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    GaussianIntegralSpec spec;
    spec.h = {-0.6 - 1.4 * std::abs(u(rng)), 0.8 * u(rng)};
    spec.s = {u(rng), u(rng)};
    spec.eta = {u(rng), u(rng)};
    if (quadratic) {
      spec.f = {0.4 * u(rng), 0.4 * u(rng)};
      spec.g = {0.4 * u(rng), 0.4 * u(rng)};
    }
    if (spec.converges() && spec.decay_rate() >= 0.25) return spec;
  }
}

Outcome gaussian_oracle() {
  const int sets = 100;
  const double half_width = 12.0;
  const int order = 160;
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  auto record = [&](Complex closed, Complex oracle) {
    worst = std::max(worst, std::abs(closed - oracle) / std::max(1.0, std::abs(oracle)));
  };
  for (int i = 0; i < sets; ++i) {
    const auto lin = random_convergent_spec(rng, false);
    record(gauss_linear(lin), quad_complex([&](Complex a) { return std::exp(lin.exponent(a)); }, half_width, order));

    const auto quad = random_convergent_spec(rng, true);
    record(gauss_quadratic(quad),
           quad_complex([&](Complex a) { return std::exp(quad.exponent(a)); }, half_width, order));

    const Complex h(0.7 + 0.8 * std::abs(u(rng)), 0.5 * u(rng));
    const Complex s(u(rng), u(rng));
    const Complex f(u(rng), u(rng));
    const int k = i % 4;
    const int l = (i / 4) % 3;
    record(gauss_monomial_hkl(h, s, f, k, l), quad_complex(
                                                  [&](Complex b) {
                                                    return ipow(std::conj(b), k) * ipow(b, l) *
                                                           std::exp(-h * std::norm(b) + s * b + f * std::conj(b));
                                                  },
                                                  half_width, order));
  }
  return {worst < 1e-8, format("%.0f sets per closed form, max relative error %.3g", sets, worst)};
}

Outcome weyl_round_trip() {
  const int dim = 64;
  const int interior = dim - resolve_taper(dim, kAutoTaper);
  const auto [a, ad] = ladder(dim);
  const std::vector<FockOperator> ops{FockOperator::identity(dim), a, ad, ad * a, number_projector(0, 0, dim),
                                      number_projector(1, 1, dim), ad * ad * a * a};
  double worst = 0.0;
  for (const auto& op : ops) {
    worst = std::max(worst, interior_residual(weyl_quantize(WeylSymbol::of_operator(op), dim), op, interior));
  }
  return {worst < 1e-5, format("7 operators, interior block %.0f, max residual %.3g", interior, worst)};
}

Outcome coherent_kernel() {
  const int dim = 64;
  std::mt19937 rng(12);
  const auto [a, ad] = ladder(dim);
  const std::vector<FockOperator> ops{FockOperator::identity(dim), a, ad, ad * a, number_projector(2, 1, dim),
                                      number_projector(0, 0, dim)};
  double worst = 0.0;
  for (const auto& op : ops) {
    const CoherentKernel kernel(op);
    for (int i = 0; i < 8; ++i) {
      const Complex alpha = random_point(rng, 1.5);
      const Complex trace = weyl_symbol(op, alpha);
      worst = std::max(worst, std::abs(kernel(alpha) - trace) / std::max(1.0, std::abs(trace)));
    }
  }
  const double calibration = kCoherentCalibration * 0.5 / CoherentKernel(FockOperator::identity(dim))(0.3).real();
  const bool pass = worst < 1e-6 && std::abs(calibration - 1.0) < 1e-8;
  return {pass, format("K = %.0f, max deviation %.3g", kCoherentCalibration, worst)};
}

Outcome projector_symbols() {
  std::mt19937 rng(55);
  double worst = 0.0;
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const auto sym = projector_weyl_symbol(m, n);
      const auto op = number_projector(m, n, 64);
      for (int i = 0; i < 6; ++i) {
        const Complex alpha = random_point(rng, 1.5);
        worst = std::max(worst, std::abs(sym(alpha) - weyl_symbol(op, alpha)));
      }
    }
  }
  return {worst < 1e-7, format("m, n <= 5, max deviation %.3g", worst)};
}

Outcome identity_suite() {
  const SuiteConfig config;
  const std::vector<IdentityReport> rows = run_identity_suite(config);
  int failures = 0;
  bool formular_exact = true;
  double worst_constancy = 0.0;
  for (const auto& r : rows) {
    if (!r.pass) ++failures;
    if (r.identity_id == "formular" && std::abs(r.fitted_constant - 1.0) > 1e-12) formular_exact = false;
    worst_constancy = std::max(worst_constancy, r.constancy);
  }
  const bool pass = failures == 0 && formular_exact && default_parameter_sets().size() >= 6;
  std::ostringstream detail;
  detail << rows.size() << " rows, " << failures << " failures, " << default_parameter_sets().size()
         << " parameter sets, max constancy " << format("%.3g", worst_constancy);
  return {pass, detail.str()};
}

Outcome similar_transform_invariance() {
  const int dim = 64;
  const int big = 3 * dim;
  const std::vector<SymplecticParams> params{
      {1.2, 0.3, 0.5, 1.15 / 1.2}, {1.0, 0.5, 0.5, 1.25}, {0.8, 0.2, 0.4, 1.35}, {1.5, 0.6, 0.3, 1.18 / 1.5},
      SymplecticParams::squeeze(-0.3)};
  double worst = 0.0;
  for (const auto& p : params) {
    const auto [u, ui] = nonunitary_u(p, big);
    const auto [a, ad] = ladder(big);
    const auto shrink = [&](const FockOperator& op) { return FockOperator(op.entries.topLeftCorner(dim, dim)); };
    const FockOperator ta = shrink(u * a * ui);
    const FockOperator tad = shrink(u * ad * ui);
    const FockOperator tn = shrink(u * (ad * a) * ui);
    const FockOperator tvac = shrink(u * number_projector(0, 0, big) * ui);
    std::mt19937 rng(77);
    for (int i = 0; i < 6; ++i) {
      const Complex alpha = random_point(rng, 1.0);
      const Complex x = p.sigma * alpha + p.tau * std::conj(alpha);
      const Complex y = p.mu * alpha + p.nu * std::conj(alpha);
      worst = std::max({worst, std::abs(weyl_symbol(ta, alpha) - y), std::abs(weyl_symbol(tad, alpha) - x),
                        std::abs(weyl_symbol(tn, alpha) - (x * y - 0.5)),
                        std::abs(weyl_symbol(tvac, alpha) - 2.0 * std::exp(-2.0 * x * y))});
    }
  }
  return {worst < 1e-5, format("4 operators, 5 parameter sets, max deviation %.3g", worst)};
}

Outcome wigner() {
  const double r = 0.2;
  double closed_dev = 0.0;
  double norm_dev = 0.0;
  bool signs = true;
  for (int n = 0; n <= 4; ++n) {
    closed_dev = std::max(closed_dev, wigner_grid(r, n, GridSpec::square(2.0, 41)).max_deviation());
    norm_dev = std::max(norm_dev, std::abs(normalization(wigner_grid(r, n, GridSpec::square(4.0, 61))) - kPi));
    signs = signs && ((wigner_oracle(0.0, r, n) > 0.0) == (n % 2 == 0));
  }
  const QuadratureMoments m = second_moments(wigner_grid(r, 0, GridSpec::square(4.0, 81)));
  const double anisotropy = std::abs(m.y2 / m.x2 / std::exp(-4.0 * r) - 1.0);
  const double negativity = negativity_volume(wigner_grid(0.0, 1, GridSpec{}));
  const double negativity_dev = std::abs(negativity / kSinglePhotonNegativity - 1.0);
  const bool pass = closed_dev < 1e-5 && norm_dev < 1e-2 && signs && anisotropy < 2e-2 && negativity_dev < 1e-2;
  std::ostringstream detail;
  detail << format("closed vs oracle %.3g, normalization error %.3g, ", closed_dev, norm_dev)
         << "origin signs " << (signs ? "ok" : "wrong")
         << format(", anisotropy error %.3g, negativity %.5f", anisotropy, negativity);
  return {pass, detail.str()};
}

Outcome determinism() {
  auto ledger = [] {
    std::ostringstream out;
    write_ledger_csv(out, run_identity_suite(SuiteConfig{}));
    return out.str();
  };
  auto grid = [] {
    std::ostringstream out;
    write_grid_csv(out, wigner_grid(0.2, 1, GridSpec{}));
    return out.str();
  };
  const std::string l1 = ledger();
  const std::string l2 = ledger();
  const std::string g1 = grid();
  const std::string g2 = grid();
  const bool pass = l1 == l2 && g1 == g2;
  return {pass, format("ledger %.0f bytes, grid %.0f bytes, byte-identical repeats", static_cast<double>(l1.size()),
                       static_cast<double>(g1.size()))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hermite_equivalence", hermite_equivalence},
      {"orthogonality", orthogonality},
      {"gaussian_oracle", gaussian_oracle},
      {"weyl_round_trip", weyl_round_trip},
      {"coherent_kernel", coherent_kernel},
      {"projector_symbols", projector_symbols},
      {"identity_suite", identity_suite},
      {"similar_transform_invariance", similar_transform_invariance},
      {"wigner", wigner},
      {"determinism", determinism},
  };
  const auto start = Clock::now();
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("total %.1f s, %d failed\n", seconds_since(start), failures);
  return failures ? 1 : 0;
}
