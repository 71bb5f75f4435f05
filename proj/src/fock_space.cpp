#include "hermiweyl/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/polynomials.hpp"

namespace hermiweyl {

namespace {

void check_dim(int dim) {
  if (dim < 2) throw DimensionError("dimension must be at least 2, got " + std::to_string(dim));
}

}  // namespace

FockOperator FockOperator::identity(int dim) { return FockOperator(Matrix::Identity(dim, dim)); }

FockOperator FockOperator::zero(int dim) { return FockOperator(Matrix::Zero(dim, dim)); }

bool FockOperator::is_hermitian(double tol) const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void SymplecticParams::validate(double tol) const {
  const Complex defect = mu * tau - nu * sigma - 1.0;
  if (std::abs(defect) > tol) {
    throw ParameterError("symplectic constraint mu tau - nu sigma = 1 violated by " +
                         std::to_string(std::abs(defect)));
  }
}

bool SymplecticParams::is_unitary(double tol) const {
  return std::abs(tau - std::conj(mu)) <= tol && std::abs(sigma - std::conj(nu)) <= tol;
}

bool SymplecticParams::is_real_nonnegative() const {
  for (Complex c : {mu, nu, sigma, tau}) {
    if (c.imag() != 0.0 || c.real() < 0.0) return false;
  }
  return true;
}

SymplecticParams SymplecticParams::from_mu_nu_sigma(Complex mu, Complex nu, Complex sigma) {
  if (mu == 0.0) throw ParameterError("mu must be nonzero");
  return {mu, nu, sigma, (1.0 + nu * sigma) / mu};
}

SymplecticParams SymplecticParams::squeeze(double r) {
  return {std::cosh(r), -std::sinh(r), -std::sinh(r), std::cosh(r)};
}

std::pair<FockOperator, FockOperator> ladder(int dim) {
  check_dim(dim);
  Matrix a = Matrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return {FockOperator(a), FockOperator(a.adjoint())};
}

FockOperator number_operator(int dim) {
  check_dim(dim);
  Matrix n = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return FockOperator(n);
}

FockOperator number_projector(int m, int n, int dim) {
  check_dim(dim);
  if (m < 0 || n < 0 || m >= dim || n >= dim) throw DimensionError("projector index outside the truncation");
  FockOperator p = FockOperator::zero(dim);
  p.entries(m, n) = 1.0;
  return p;
}

FockVector number_state(int k, int dim) {
  check_dim(dim);
  if (k < 0 || k >= dim) throw DimensionError("number state outside the truncation");
  FockVector v{Vector::Zero(dim), 0.0};
  v.amplitudes(k) = 1.0;
  return v;
}

FockVector coherent(Complex z, int dim) {
  check_dim(dim);
  FockVector v{Vector(dim), 0.0};
  Complex c = std::exp(-0.5 * std::norm(z));
  for (int k = 0; k < dim; ++k) {
    v.amplitudes(k) = c;
    c *= z / std::sqrt(k + 1.0);
  }
  v.tail_mass = std::max(0.0, 1.0 - v.amplitudes.squaredNorm());
  return v;
}

FockOperator squeeze(double r, int dim) {
  check_dim(dim);
  const auto [a, ad] = ladder(dim);
  const Matrix gen = (0.5 * r) * (ad.entries * ad.entries - a.entries * a.entries);
  FockOperator s(gen.exp());
  const double leak = std::norm(s.entries(dim - 1, 0)) + std::norm(s.entries(dim - 2, 0));
  if (leak > 1e-6) {
    throw TruncationError("squeeze: vacuum column leaks " + std::to_string(leak) + " at dim " +
                          std::to_string(dim));
  }
  return s;
}

Matrix nilpotent_exp(const Matrix& a, Complex c) {
  const auto n = a.rows();
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    term = (c / static_cast<double>(k)) * (term * a);
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
    result += term;
  }
  return result;
}

namespace {

// exp(c a^dagger^2), entries (j + 2k, j) = c^k / k! sqrt((j + 2k)! / j!)
Matrix exp_creation_squared(Complex c, int dim) {
  Matrix out = Matrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Complex entry = 1.0;
    for (int k = 0; j + 2 * k < dim; ++k) {
      out(j + 2 * k, j) = entry;
      entry *= c / (k + 1.0) * std::sqrt((j + 2.0 * k + 1.0) * (j + 2.0 * k + 2.0));
    }
  }
  return out;
}

}  // namespace

std::pair<FockOperator, FockOperator> nonunitary_u(const SymplecticParams& params, int dim) {
  check_dim(dim);
  params.validate();
  const auto [mu, nu, sigma, tau] = params;
  if (mu == 0.0 || tau == 0.0) throw ParameterError("nonunitary_u: mu and tau must be nonzero");
  if (std::abs(nu / mu) >= 1.0 || std::abs(sigma / tau) >= 1.0) {
    throw ParameterError("nonunitary_u: requires |nu/mu| < 1 and |sigma/tau| < 1");
  }
  Vector diag_u(dim);
  Vector diag_inv(dim);
  Complex pu = 1.0;
  Complex pi = 1.0;
  for (int k = 0; k < dim; ++k) {
    diag_u(k) = pu;
    diag_inv(k) = pi;
    pu /= mu;
    pi /= tau;
  }
  const Matrix u = (1.0 / std::sqrt(mu)) * exp_creation_squared(-nu / (2.0 * mu), dim) * diag_u.asDiagonal() *
                   exp_creation_squared(sigma / (2.0 * mu), dim).transpose();
  const Matrix u_inv = (1.0 / std::sqrt(tau)) * exp_creation_squared(nu / (2.0 * tau), dim) *
                       diag_inv.asDiagonal() * exp_creation_squared(-sigma / (2.0 * tau), dim).transpose();
  return {FockOperator(u), FockOperator(u_inv)};
}

ExcitedSqueezedState excited_squeezed_density(double r, int n_add, int dim) {
  check_dim(dim);
  if (n_add < 0 || n_add > 6) throw ParameterError("excited_squeezed_density: n_add must lie in [0, 6]");
  if (std::abs(r) > 1.0) throw ParameterError("excited_squeezed_density: |r| must not exceed 1");
  // vacuum column from a doubled space
  Vector v = squeeze(r, 2 * dim).entries.col(0).head(dim);
  for (int step = 0; step < n_add; ++step) {
    for (int k = dim - 1; k >= 1; --k) v(k) = std::sqrt(static_cast<double>(k)) * v(k - 1);
    v(0) = 0.0;
  }
  ExcitedSqueezedState out;
  const double ch = std::cosh(r);
  out.c_n = factorial(n_add) * std::pow(ch, n_add) * legendre(n_add, ch);
  out.c_n_trace = v.squaredNorm();
  if (std::abs(out.c_n_trace - out.c_n) > 1e-6 * out.c_n) {
    throw TruncationError("excited_squeezed_density: normalisation mismatch " + std::to_string(out.c_n_trace) +
                          " vs " + std::to_string(out.c_n));
  }
  out.psi = v / std::sqrt(out.c_n);
  out.rho = FockOperator(out.psi * out.psi.adjoint());
  return out;
}

FockOperator normal_ordered(const BivariatePolynomial& p, int dim) {
  check_dim(dim);
  const auto [a, ad] = ladder(dim);
  int max_i = 0;
  int max_j = 0;
  for (const auto& [e, c] : p.terms()) {
    max_i = std::max(max_i, e.i);
    max_j = std::max(max_j, e.j);
  }
  std::vector<Matrix> a_pow{Matrix::Identity(dim, dim)};
  std::vector<Matrix> ad_pow{Matrix::Identity(dim, dim)};
  for (int k = 1; k <= max_i; ++k) a_pow.push_back(a_pow.back() * a.entries);
  for (int k = 1; k <= max_j; ++k) ad_pow.push_back(ad_pow.back() * ad.entries);
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [e, c] : p.terms()) out += c * (ad_pow[e.j] * a_pow[e.i]);
  return FockOperator(out);
}

double interior_residual(const FockOperator& a, const FockOperator& b, int interior) {
  const int k = std::min({interior, a.dim(), b.dim()});
  if (k <= 0) return 0.0;
  return (a.entries.topLeftCorner(k, k) - b.entries.topLeftCorner(k, k)).cwiseAbs().maxCoeff();
}

}  // namespace hermiweyl
