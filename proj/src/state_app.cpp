#include "hermiweyl/state_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/polynomials.hpp"
#include "hermiweyl/weyl_transform.hpp"

namespace hermiweyl {

namespace {

unsigned char channel(double v) { return static_cast<unsigned char>(std::clamp(std::lround(v), 0L, 255L)); }

}  // namespace

double wigner_closed(Complex alpha, double r, int n_add, double k_w, WignerSign sign) {
  if (!(r > 0.0)) throw ParameterError("wigner_closed: the closed form needs r > 0");
  check_order(n_add, 6, "wigner_closed");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double th = std::tanh(r);
  const Complex ac = std::conj(alpha);
  const Complex arg_scale = Complex(0.0, 1.0) * std::sqrt(Complex(2.0 / th));
  const Complex z = arg_scale * (ac * ch - alpha * sh);
  double sum = 0.0;
  for (int l = 0; l <= n_add; ++l) {
    const Complex h = hermite1_value(n_add - l, z);
    sum += binomial(n_add, l) * std::ldexp(1.0, l) * ipow(-1.0 / th, l) / factorial(n_add - l) * std::norm(h);
  }
  const double pre = ipow((sign == WignerSign::Corrected ? 1.0 : -1.0) * sh / 2.0, n_add) / legendre(n_add, ch);
  return k_w * pre * std::exp(-2.0 * std::norm(alpha * sh - ac * ch)) * sum;
}

WignerOracle::WignerOracle(double r, int n_add, int dim) {
  if (dim < 64) throw DimensionError("wigner_oracle: dim must be at least 64");
  rho_ = excited_squeezed_density(r, n_add, dim).rho;
}

Complex WignerOracle::complex_value(Complex alpha) const { return weyl_symbol(rho_, alpha, 0); }

double WignerOracle::operator()(Complex alpha) const {
  const Complex w = complex_value(alpha);
  if (std::abs(w.imag()) > 1e-9) throw TruncationError("wigner: imaginary residue " + std::to_string(w.imag()));
  return w.real();
}

double wigner_oracle(Complex alpha, double r, int n_add, int dim) { return WignerOracle(r, n_add, dim)(alpha); }

double fit_wigner_calibration(int dim) { return wigner_oracle(0.0, 0.2, 0, dim) / wigner_closed(0.0, 0.2, 0, 1.0); }

void GridSpec::validate() const {
  if (nx < 1 || ny < 1 || nx > 512 || ny > 512) throw ParameterError("grid sample counts must lie in [1, 512]");
  if (!(x_max >= x_min && y_max >= y_min)) throw ParameterError("grid ranges must be ordered");
}

GridSpec GridSpec::square(double half_width, int samples) {
  return GridSpec{-half_width, half_width, -half_width, half_width, samples, samples};
}

double PhaseSpaceGrid::max_deviation() const {
  if (!has_closed()) return std::numeric_limits<double>::quiet_NaN();
  double worst = 0.0;
  for (std::size_t i = 0; i < values_oracle.size(); ++i) {
    worst = std::max(worst, std::abs(values_closed[i] - values_oracle[i]));
  }
  return worst;
}

PhaseSpaceGrid wigner_grid(double r, int n_add, const GridSpec& spec, int dim, double k_w) {
  spec.validate();
  PhaseSpaceGrid grid;
  grid.spec = spec;
  grid.r = r;
  grid.n_add = n_add;
  const std::size_t count = static_cast<std::size_t>(spec.nx) * spec.ny;
  grid.values_closed.assign(count, std::numeric_limits<double>::quiet_NaN());
  grid.values_oracle.resize(count);
  const WignerOracle oracle(r, n_add, dim);
  for (int j = 0; j < spec.ny; ++j) {
    for (int i = 0; i < spec.nx; ++i) {
      const Complex alpha(spec.x(i), spec.y(j));
      const std::size_t k = static_cast<std::size_t>(j) * spec.nx + i;
      const Complex w = oracle.complex_value(alpha);
      grid.max_imaginary = std::max(grid.max_imaginary, std::abs(w.imag()));
      grid.values_oracle[k] = w.real();
      if (r > 0.0) grid.values_closed[k] = wigner_closed(alpha, r, n_add, k_w);
    }
  }
  if (grid.max_imaginary > 1e-9) {
    throw TruncationError("wigner_grid: imaginary residue " + std::to_string(grid.max_imaginary));
  }
  return grid;
}

double normalization(const PhaseSpaceGrid& grid) {
  double total = 0.0;
  for (double w : grid.values_oracle) total += w;
  return total * grid.spec.dx() * grid.spec.dy();
}

double negativity_volume(const PhaseSpaceGrid& grid) {
  double total = 0.0;
  for (double w : grid.values_oracle) total += std::min(w, 0.0);
  return std::abs(total) * grid.spec.dx() * grid.spec.dy();
}

QuadratureMoments second_moments(const PhaseSpaceGrid& grid) {
  double mass = 0.0;
  QuadratureMoments m;
  for (int j = 0; j < grid.spec.ny; ++j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      const double w = grid.oracle(i, j);
      mass += w;
      m.x2 += grid.spec.x(i) * grid.spec.x(i) * w;
      m.y2 += grid.spec.y(j) * grid.spec.y(j) * w;
    }
  }
  m.x2 /= mass;
  m.y2 /= mass;
  return m;
}

void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid) {
  out << "re_alpha,im_alpha,w_closed,w_oracle\n";
  char buf[128];
  for (int j = 0; j < grid.spec.ny; ++j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", grid.spec.x(i), grid.spec.y(j), grid.closed(i, j),
                    grid.oracle(i, j));
      out << buf;
    }
  }
}

void write_pixmap(std::ostream& out, const PhaseSpaceGrid& grid) {
  double peak = 0.0;
  for (double w : grid.values_oracle) peak = std::max(peak, std::abs(w));
  out << "P6\n" << grid.spec.nx << ' ' << grid.spec.ny << "\n255\n";
  for (int j = grid.spec.ny - 1; j >= 0; --j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      const double t = peak > 0.0 ? grid.oracle(i, j) / peak : 0.0;
      unsigned char rgb[3];
      if (t >= 0.0) {
        rgb[0] = channel(128.0 + 127.0 * t);
        rgb[1] = channel(128.0 - 128.0 * t);
        rgb[2] = channel(128.0 - 128.0 * t);
      } else {
        rgb[0] = channel(128.0 + 128.0 * t);
        rgb[1] = channel(128.0 + 128.0 * t);
        rgb[2] = channel(128.0 - 127.0 * t);
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

}  // namespace hermiweyl
