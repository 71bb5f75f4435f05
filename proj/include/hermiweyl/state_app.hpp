#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hermiweyl/fock_space.hpp"

namespace hermiweyl {

inline constexpr double kWignerCalibration = 2.0;
inline constexpr int kWignerDim = 96;

enum class WignerSign {
  /// (sinh r / 2)^n, reproduces the oracle
  Corrected,
  /// (-sinh r / 2)^n as printed
  Printed,
};

/// K_W (1/P_n(cosh r)) (+-sinh r/2)^n exp(-2|alpha sinh r - alpha* cosh r|^2)
///   sum_l C(n,l) 2^l (-coth r)^l / (n-l)! |H_{n-l}[i sqrt(2/tanh r)(alpha* cosh r - alpha sinh r)]|^2.
/// Throws ParameterError unless r > 0.
double wigner_closed(Complex alpha, double r, int n_add, double k_w = kWignerCalibration,
                     WignerSign sign = WignerSign::Corrected);

/// 2 pi Tr[rho Delta(alpha)] for the normalised a^dagger^n S(r)|0>, with rho built once.
class WignerOracle {
 public:
  WignerOracle(double r, int n_add, int dim = kWignerDim);
  /// Throws TruncationError when the imaginary residue exceeds 1e-9.
  double operator()(Complex alpha) const;
  Complex complex_value(Complex alpha) const;

 private:
  FockOperator rho_;
};

double wigner_oracle(Complex alpha, double r, int n_add, int dim = kWignerDim);

/// oracle / uncalibrated closed form at (n = 0, r = 0.2, alpha = 0).
double fit_wigner_calibration(int dim = kWignerDim);

struct GridSpec {
  double x_min = -2.5;
  double x_max = 2.5;
  double y_min = -2.5;
  double y_max = 2.5;
  int nx = 201;
  int ny = 201;

  void validate() const;
  double dx() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
  double dy() const { return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0; }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
  static GridSpec square(double half_width, int samples);
};

/// Values are stored row by row, y outer and x inner.
struct PhaseSpaceGrid {
  GridSpec spec;
  double r = 0.0;
  int n_add = 0;
  /// NaN everywhere unless r > 0
  std::vector<double> values_closed;
  std::vector<double> values_oracle;
  double max_imaginary = 0.0;

  double closed(int i, int j) const { return values_closed[static_cast<std::size_t>(j) * spec.nx + i]; }
  double oracle(int i, int j) const { return values_oracle[static_cast<std::size_t>(j) * spec.nx + i]; }
  bool has_closed() const { return r > 0.0; }
  double max_deviation() const;
};

PhaseSpaceGrid wigner_grid(double r, int n_add, const GridSpec& spec = {}, int dim = kWignerDim,
                           double k_w = kWignerCalibration);

/// sum W dx dy over the oracle values.
double normalization(const PhaseSpaceGrid& grid);

/// -sum min(W, 0) dx dy over the oracle values.
double negativity_volume(const PhaseSpaceGrid& grid);

struct QuadratureMoments {
  double x2 = 0.0;
  double y2 = 0.0;
};

/// <x^2> and <y^2> of the oracle values with alpha = x + iy.
QuadratureMoments second_moments(const PhaseSpaceGrid& grid);

/// Header re_alpha,im_alpha,w_closed,w_oracle.
void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid);

/// Binary P6 pixmap of the oracle values, top row at y_max. Colormap: t = W / max|W| in [-1, 1];
/// t >= 0 maps to (128 + 127t, 128 - 128t, 128 - 128t), t < 0 to (128 + 128t, 128 + 128t, 128 - 127t),
/// so zero is mid-gray, positive values red and negative values blue.
void write_pixmap(std::ostream& out, const PhaseSpaceGrid& grid);

}  // namespace hermiweyl
