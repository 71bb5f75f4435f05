#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hermiweyl/fock_space.hpp"
#include "hermiweyl/polynomials.hpp"

namespace hermiweyl {

inline constexpr double kPolynomialTolerance = 1e-7;
inline constexpr double kGridTolerance = 1e-5;
inline constexpr double kConstancyTolerance = 1e-8;

struct IdentityReport {
  std::string identity_id;
  std::string params;
  int m = 0;
  int n = 0;
  /// printed right-hand side divided by the exact left-hand side
  Complex fitted_constant = 1.0;
  /// shape mismatch after rescaling by the fitted constant
  double max_deviation = 0.0;
  /// largest relative change of the constant when refitted at other reference points
  double constancy = 0.0;
  double tolerance = kPolynomialTolerance;
  bool pass = false;
  std::string sign_convention;
};

/// Fits rhs = c lhs. The constant comes from alpha = 0 unless lhs vanishes there,
/// in which case the lowest-order nonvanishing coefficient is used.
IdentityReport compare_polynomials(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs,
                                   double tolerance = kPolynomialTolerance);

std::string format_params(const SymplecticParams& p);

/// exp(G) d^m/dalpha^m d^n/dalpha*^n exp(-G), G = 4 mu tau |alpha|^2 + 2 sigma mu alpha^2 + 2 nu tau alpha*^2.
BivariatePolynomial differential_lhs(const SymplecticParams& p, int m, int n);

/// sigma alpha + tau alpha* and mu alpha + nu alpha*.
BivariatePolynomial image_of_creation(const SymplecticParams& p);
BivariatePolynomial image_of_annihilation(const SymplecticParams& p);

/// Hermite-product right-hand side expanded without square roots. Valid for real
/// non-negative parameters, zeros included; throws BranchError otherwise.
BivariatePolynomial nf_rhs(const SymplecticParams& p, int m, int n);
/// The same sum written with the printed square roots. Requires strictly positive parameters.
BivariatePolynomial nf_rhs_radicals(const SymplecticParams& p, int m, int n);
/// Unitary-case m = n form with |H_{m-l}|^2, for real positive mu, nu.
BivariatePolynomial unitary_square_rhs(double mu, double nu, int m);
/// Two-variable Hermite double sum.
BivariatePolynomial qwe_rhs(const SymplecticParams& p, int m, int n);
/// The printed squeeze display, mu = tau = cosh r, nu = sigma = sinh r.
BivariatePolynomial qwe_squeeze_rhs(double r, int m, int n);

IdentityReport check_formular(int m, int n);
IdentityReport check_nf(const SymplecticParams& p, int m, int n);
/// Returns the Hermite-product report and, for m = n, the |H|^2 equivalence report.
std::vector<IdentityReport> check_unitary_case(Complex mu, Complex nu, int m, int n);
/// Returns the qwe report plus its equivalence with the nf right-hand side.
std::vector<IdentityReport> check_qwe(const SymplecticParams& p, int m, int n);
IdentityReport check_qwe_squeeze(double r, int m, int n);

/// Evaluates g2 on a 5 x 5 grid by the Hermite-product sum (A, real non-negative
/// parameters only), the differential form (B), the two-variable Hermite sum (C)
/// and the Fock-space oracle 2 pi Tr[a^dagger^m U|0><0|U^-1 a^n Delta] (D).
/// One report per route, each fitted against D.
std::vector<IdentityReport> check_g2_three_ways(const SymplecticParams& p, int m, int n, int dim = kDefaultDim);

/// Binomial normal-ordering identities for (mu a^dagger - sigma a)^m, (tau a - nu a^dagger)^n and
/// their vacuum sandwich. Every sign convention is tried; sign_convention names the one that matches.
std::vector<IdentityReport> check_binomial(const SymplecticParams& p, int m, int n, int dim = 40);

/// Hermite-product Gaussian integral as a report row.
IdentityReport check_twoh(int m, int n, Complex lambda, Complex scale_a, Complex scale_b);

struct SuiteConfig {
  int max_order = 5;
  int g2_max_order = 3;
  int dim = kDefaultDim;
  std::vector<SymplecticParams> params;
  double tolerance = kPolynomialTolerance;
  unsigned seed = 20240611;
};

std::vector<SymplecticParams> default_parameter_sets();

/// Runs every check over the configured parameter matrix and returns rows
/// sorted by (identity_id, m, n, params).
std::vector<IdentityReport> run_identity_suite(const SuiteConfig& config);

void write_ledger_csv(std::ostream& out, const std::vector<IdentityReport>& rows);

}  // namespace hermiweyl
