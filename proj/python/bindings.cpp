#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/fock_space.hpp"
#include "hermiweyl/gaussian_integrals.hpp"
#include "hermiweyl/identities.hpp"
#include "hermiweyl/polynomials.hpp"
#include "hermiweyl/state_app.hpp"
#include "hermiweyl/weyl_transform.hpp"

namespace py = pybind11;
using namespace hermiweyl;

namespace {

py::dict coefficients(const BivariatePolynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e.i, e.j)] = c;
  return out;
}

py::array_t<double> as_array(const std::vector<double>& values, int ny, int nx) {
  py::array_t<double> out({ny, nx});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

SymplecticParams make_params(Complex mu, Complex nu, Complex sigma, Complex tau) {
  const SymplecticParams p{mu, nu, sigma, tau};
  p.validate(1e-9);
  return p;
}

}  // namespace

PYBIND11_MODULE(_hermiweyl, m) {
  m.doc() = "Two-variable Hermite polynomials, Weyl symbols and Wigner functions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<OrderOverflowError>(m, "OrderOverflowError", base.ptr());
  py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());
  py::register_exception<BranchError>(m, "BranchError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());

  m.def(
      "hermite2_coefficients",
      [](int mm, int n, const std::string& route) {
        if (route == "sum") return coefficients(hermite2(mm, n));
        if (route == "generating") return coefficients(hermite2_generating(mm, n));
        if (route == "differential") return coefficients(hermite2_differential(mm, n));
        throw ParameterError("route must be sum, generating or differential");
      },
      py::arg("m"), py::arg("n"), py::arg("route") = "sum",
      "coefficients of H_{m,n} keyed by (power of alpha, power of alpha*)");
  m.def(
      "hermite2", [](int mm, int n, Complex alpha) { return hermite2(mm, n)(alpha); }, py::arg("m"), py::arg("n"),
      py::arg("alpha"));
  m.def("hermite2_value", &hermite2_value, py::arg("m"), py::arg("n"), py::arg("x"), py::arg("y"));
  m.def("hermite1_value", &hermite1_value, py::arg("n"), py::arg("z"));

  m.def(
      "gauss_linear",
      [](Complex h, Complex s, Complex eta) { return gauss_linear({h, s, eta}); }, py::arg("h"), py::arg("s"),
      py::arg("eta"));
  m.def(
      "gauss_quadratic",
      [](Complex h, Complex s, Complex eta, Complex f, Complex g) { return gauss_quadratic({h, s, eta, f, g}); },
      py::arg("h"), py::arg("s"), py::arg("eta"), py::arg("f"), py::arg("g"));
  m.def(
      "gauss_monomial_hkl",
      [](Complex h, Complex s, Complex f, int k, int l) { return gauss_monomial_hkl(h, s, f, k, l); }, py::arg("h"),
      py::arg("s"), py::arg("f"), py::arg("k"), py::arg("l"));

  m.def(
      "projector_symbol", [](int mm, int n, Complex alpha) { return projector_weyl_symbol(mm, n)(alpha); },
      py::arg("m"), py::arg("n"), py::arg("alpha"));
  m.def(
      "projector_symbol_trace",
      [](int mm, int n, Complex alpha, int dim) { return weyl_symbol(number_projector(mm, n, dim), alpha); },
      py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("dim") = kDefaultDim);

  m.def(
      "check_formular",
      [](int mm, int n) {
        const IdentityReport r = check_formular(mm, n);
        return py::make_tuple(r.fitted_constant, r.max_deviation, r.pass);
      },
      py::arg("m"), py::arg("n"), "(fitted constant, deviation, pass)");
  m.def(
      "check_nf",
      [](Complex mu, Complex nu, Complex sigma, Complex tau, int mm, int n) {
        const IdentityReport r = check_nf(make_params(mu, nu, sigma, tau), mm, n);
        return py::make_tuple(r.fitted_constant, r.max_deviation, r.pass);
      },
      py::arg("mu"), py::arg("nu"), py::arg("sigma"), py::arg("tau"), py::arg("m"), py::arg("n"),
      "(fitted constant, deviation, pass)");
  m.def(
      "identity_suite",
      [](int max_order, int g2_max_order) {
        SuiteConfig config;
        config.max_order = max_order;
        config.g2_max_order = std::min(g2_max_order, max_order);
        py::list rows;
        for (const auto& r : run_identity_suite(config)) {
          py::dict row;
          row["identity_id"] = r.identity_id;
          row["params"] = r.params;
          row["m"] = r.m;
          row["n"] = r.n;
          row["fitted_constant"] = r.fitted_constant;
          row["max_deviation"] = r.max_deviation;
          row["constancy"] = r.constancy;
          row["tolerance"] = r.tolerance;
          row["pass"] = r.pass;
          row["sign_convention"] = r.sign_convention;
          rows.append(row);
        }
        return rows;
      },
      py::arg("max_order") = 5, py::arg("g2_max_order") = 3);

  m.attr("WIGNER_CALIBRATION") = kWignerCalibration;
  m.def(
      "wigner_closed", [](Complex alpha, double r, int n) { return wigner_closed(alpha, r, n); }, py::arg("alpha"),
      py::arg("r"), py::arg("n"));
  m.def("wigner_oracle", &wigner_oracle, py::arg("alpha"), py::arg("r"), py::arg("n"), py::arg("dim") = kWignerDim);
  m.def(
      "wigner_grid",
      [](double r, int n, double half_width, int samples, int dim) {
        const GridSpec spec = GridSpec::square(half_width, samples);
        const PhaseSpaceGrid g = wigner_grid(r, n, spec, dim);
        py::array_t<double> xs(samples);
        for (int i = 0; i < samples; ++i) xs.mutable_data()[i] = spec.x(i);
        py::dict out;
        out["x"] = xs;
        out["closed"] = as_array(g.values_closed, spec.ny, spec.nx);
        out["oracle"] = as_array(g.values_oracle, spec.ny, spec.nx);
        out["normalization"] = normalization(g);
        out["negativity_volume"] = negativity_volume(g);
        return out;
      },
      py::arg("r"), py::arg("n"), py::arg("half_width") = 2.5, py::arg("samples") = 201,
      py::arg("dim") = kWignerDim, "rows index Im(alpha), columns Re(alpha)");
}
