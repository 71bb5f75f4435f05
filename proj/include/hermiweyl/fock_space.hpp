#pragma once

#include <Eigen/Dense>
#include <utility>

#include "hermiweyl/polynomial.hpp"

namespace hermiweyl {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kDefaultDim = 64;

/// Dense operator on span{|0>, ..., |dim-1>}.
struct FockOperator {
  Matrix entries;

  FockOperator() = default;
  explicit FockOperator(Matrix m) : entries(std::move(m)) {}

  static FockOperator identity(int dim);
  static FockOperator zero(int dim);

  int dim() const { return static_cast<int>(entries.rows()); }
  Complex operator()(int i, int j) const { return entries(i, j); }
  Complex trace() const { return entries.trace(); }
  FockOperator adjoint() const { return FockOperator(entries.adjoint()); }
  bool is_hermitian(double tol = 1e-12) const;

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    return FockOperator(a.entries * b.entries);
  }
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    return FockOperator(a.entries + b.entries);
  }
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    return FockOperator(a.entries - b.entries);
  }
  friend FockOperator operator*(Complex s, const FockOperator& a) { return FockOperator(s * a.entries); }
};

struct FockVector {
  Vector amplitudes;
  /// Probability weight that the exact state carries beyond the truncation.
  double tail_mass = 0.0;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

/// Parameters (mu, nu, sigma, tau) of U a U^-1 = mu a + nu a^dagger with mu tau - nu sigma = 1.
struct SymplecticParams {
  Complex mu = 1.0;
  Complex nu = 0.0;
  Complex sigma = 0.0;
  Complex tau = 1.0;

  /// Throws ParameterError unless |mu tau - nu sigma - 1| <= tol.
  void validate(double tol = 1e-12) const;
  /// tau = conj(mu) and sigma = conj(nu).
  bool is_unitary(double tol = 1e-12) const;
  bool is_real_nonnegative() const;

  /// Completes tau from the constraint.
  static SymplecticParams from_mu_nu_sigma(Complex mu, Complex nu, Complex sigma);
  /// The parameters realised by exp[(r/2)(a^dagger^2 - a^2)].
  static SymplecticParams squeeze(double r);
};

/// Truncated annihilation and creation operators.
std::pair<FockOperator, FockOperator> ladder(int dim);

FockOperator number_operator(int dim);

/// |m><n|.
FockOperator number_projector(int m, int n, int dim);

FockVector number_state(int k, int dim);

/// Coherent state e^{-|z|^2/2} sum z^k / sqrt(k!) |k>.
FockVector coherent(Complex z, int dim);

/// exp[(r/2)(a^dagger^2 - a^2)] by Pade scaling and squaring. Throws
/// TruncationError when the vacuum column leaks more than 1e-6 of probability
/// into the last two basis states.
FockOperator squeeze(double r, int dim);

/// The operator U with U a U^-1 = mu a + nu a^dagger in normal-ordered form and its
/// inverse. Every stored entry is exact; only products feel the truncation.
std::pair<FockOperator, FockOperator> nonunitary_u(const SymplecticParams& params, int dim);

struct ExcitedSqueezedState {
  FockOperator rho;
  /// n! cosh^n r P_n(cosh r)
  double c_n = 1.0;
  /// The same constant measured as the norm of the truncated unnormalised vector.
  double c_n_trace = 1.0;
  /// Normalised state vector (a^dagger)^n S(r)|0> / sqrt(c_n).
  Vector psi;
};

/// Throws TruncationError when the truncated norm and the closed form differ by more than 1e-6 relative.
ExcitedSqueezedState excited_squeezed_density(double r, int n_add, int dim);

/// Normal-ordered operator sum c_ij a^dagger^j a^i for p = sum c_ij alpha^i alpha*^j.
FockOperator normal_ordered(const BivariatePolynomial& p, int dim);

/// max |a_ij - b_ij| over i, j < interior.
double interior_residual(const FockOperator& a, const FockOperator& b, int interior);

/// exp(c A) for nilpotent A, summed until the series terminates.
Matrix nilpotent_exp(const Matrix& a, Complex c);

}  // namespace hermiweyl
