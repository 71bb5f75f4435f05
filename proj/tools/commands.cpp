#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "hermiweyl/errors.hpp"
#include "hermiweyl/identities.hpp"
#include "hermiweyl/polynomials.hpp"
#include "hermiweyl/state_app.hpp"
#include "hermiweyl/weyl_transform.hpp"

namespace hermiweyl::cli {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + " " + fmt(z.imag()); }

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("not a number: '" + text + "'");
  return value;
}

std::ofstream open_output(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ParameterError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text += c;
  }
  if (text.empty()) throw ParameterError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') return parse_real(text);
  const std::string body = text.substr(0, text.size() - 1);
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

SymplecticParams parse_params(const std::string& text) {
  std::vector<Complex> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_complex(item));
  if (parts.size() != 4) throw ParameterError("--params needs four values mu,nu,sigma,tau");
  const SymplecticParams p{parts[0], parts[1], parts[2], parts[3]};
  p.validate(1e-9);
  return p;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const std::size_t x = text.find_first_of("xX");
  auto count = [](const std::string& s) {
    const double v = parse_real(s);
    if (v != std::floor(v) || v < 1) throw ParameterError("grid sizes must be positive integers");
    return static_cast<int>(v);
  };
  if (x == std::string::npos) {
    const int n = count(text);
    return {n, n};
  }
  return {count(text.substr(0, x)), count(text.substr(x + 1))};
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  const int dim = config.dim ? config.dim : kDefaultDim;
  const double tolerance = config.tolerance.value_or(kPolynomialTolerance);
  if (config.max_order < 0 || dim < 64 || !(tolerance > 0.0) || config.random_sets < 0) {
    throw ParameterError("verify: need --max-order >= 0, --dim >= 64, --tolerance > 0");
  }
  SuiteConfig suite;
  suite.max_order = config.max_order;
  suite.g2_max_order = std::min(config.g2_max_order, config.max_order);
  suite.dim = dim;
  suite.tolerance = tolerance;
  suite.seed = config.seed;
  for (const auto& text : config.params) suite.params.push_back(parse_params(text));
  if (config.random_sets > 0) {
    if (suite.params.empty()) suite.params = default_parameter_sets();
    std::mt19937 rng(config.seed);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int k = 0; k < config.random_sets; ++k) {
      suite.params.push_back(SymplecticParams::from_mu_nu_sigma(0.8 + 0.5 * u(rng), 0.5 * u(rng), 0.5 * u(rng)));
    }
  }
  const std::vector<IdentityReport> rows = run_identity_suite(suite);

  const std::string path = config.out.empty() ? "ledger.csv" : config.out;
  std::ofstream out = open_output(path);
  write_ledger_csv(out, rows);

  int failures = 0;
  std::map<std::string, int> rescaled;
  for (const auto& r : rows) {
    if (!r.pass) {
      ++failures;
      log << "FAIL " << r.identity_id << " m=" << r.m << " n=" << r.n << " params=" << r.params
          << " deviation=" << fmt(r.max_deviation) << "\n";
    }
    if (std::abs(r.fitted_constant - 1.0) > 1e-9) ++rescaled[r.identity_id];
  }
  for (const auto& [id, count] : rescaled) {
    log << "note " << id << ": " << count << " rows need a constant other than 1\n";
  }
  log << "rows " << rows.size() << "\n";
  log << "failures " << failures << "\n";
  log << "ledger " << path << "\n";
  return failures ? kShapeFailure : kPass;
}

int cmd_hermite(const RunConfig& config, std::ostream& log) {
  const Complex alpha = parse_complex(config.alpha);
  check_order(config.m, kDefaultMaxOrder, "hermite");
  check_order(config.n, kDefaultMaxOrder, "hermite");
  const Complex sum = hermite2(config.m, config.n)(alpha);
  const Complex generating = hermite2_generating(config.m, config.n)(alpha);
  const Complex differential = hermite2_differential(config.m, config.n)(alpha);
  const double spread = std::max({std::abs(sum - generating), std::abs(sum - differential),
                                  std::abs(generating - differential)});
  log << "sum " << fmt(sum) << "\n";
  log << "generating " << fmt(generating) << "\n";
  log << "differential " << fmt(differential) << "\n";
  log << "max_disagreement " << fmt(spread) << "\n";
  return kPass;
}

int cmd_symbol(const RunConfig& config, std::ostream& log) {
  const Complex alpha = parse_complex(config.alpha);
  const int dim = config.dim ? config.dim : kDefaultDim;
  if (dim < 2) throw ParameterError("symbol: --dim must be at least 2");
  FockOperator op;
  std::optional<Complex> exact;
  const auto [a, ad] = ladder(dim);
  if (config.op == "identity") {
    op = FockOperator::identity(dim);
    exact = 1.0;
  } else if (config.op == "a") {
    op = a;
    exact = alpha;
  } else if (config.op == "adag") {
    op = ad;
    exact = std::conj(alpha);
  } else if (config.op == "number") {
    op = number_operator(dim);
    exact = std::norm(alpha) - 0.5;
  } else if (config.op == "projector") {
    if (config.m >= dim || config.n >= dim || config.m < 0 || config.n < 0) {
      throw ParameterError("symbol: projector indices must lie in [0, dim)");
    }
    op = number_projector(config.m, config.n, dim);
    exact = projector_weyl_symbol(config.m, config.n, kDefaultMaxOrder).exact(alpha);
  } else if (config.op == "normal") {
    check_order(config.m, kDefaultMaxOrder, "symbol");
    check_order(config.n, kDefaultMaxOrder, "symbol");
    op = normal_ordered(BivariatePolynomial::monomial(config.n, config.m), dim);
    exact = normal_to_weyl_series({{{config.m, config.n}, 1.0}}, alpha);
  } else {
    throw ParameterError("symbol: unknown --op '" + config.op + "'");
  }
  const Complex trace = weyl_symbol(op, alpha);
  const Complex coherent = CoherentKernel(op)(alpha);
  log << "trace " << fmt(trace) << "\n";
  log << "coherent " << fmt(coherent) << "\n";
  if (exact) log << "exact " << fmt(*exact) << "\n";
  return kPass;
}

int cmd_wigner(const RunConfig& config, std::ostream& log) {
  const auto [nx, ny] = parse_grid(config.grid);
  if (!(config.window > 0.0)) throw ParameterError("wigner: --window must be positive");
  if (config.n_add < 0 || config.n_add > 6) throw ParameterError("wigner: --n must lie in [0, 6]");
  if (std::abs(config.r) > 1.0) throw ParameterError("wigner: |r| must not exceed 1");
  const int dim = config.dim ? config.dim : kWignerDim;
  const double tolerance = config.tolerance.value_or(1e-5);
  if (dim < 64 || !(tolerance > 0.0)) throw ParameterError("wigner: need --dim >= 64 and --tolerance > 0");
  GridSpec spec = GridSpec::square(config.window, nx);
  spec.ny = ny;
  spec.validate();
  const PhaseSpaceGrid grid = wigner_grid(config.r, config.n_add, spec, dim);

  const std::string path = config.out.empty() ? "wigner.csv" : config.out;
  std::ofstream out = open_output(path);
  write_grid_csv(out, grid);
  if (!config.pixmap.empty()) {
    std::ofstream pix = open_output(config.pixmap, true);
    write_pixmap(pix, grid);
  }
  const double norm = normalization(grid);
  log << "normalization " << fmt(norm) << "\n";
  log << "normalization_residual " << fmt(norm - 3.14159265358979323846) << "\n";
  log << "negativity_volume " << fmt(negativity_volume(grid)) << "\n";
  log << "w_origin " << fmt(wigner_oracle(0.0, config.r, config.n_add, dim)) << "\n";
  if (grid.has_closed()) {
    const double dev = grid.max_deviation();
    log << "max_closed_oracle_deviation " << fmt(dev) << "\n";
    log << "grid " << path << "\n";
    return dev < tolerance ? kPass : kShapeFailure;
  }
  log << "grid " << path << "\n";
  return kPass;
}

}  // namespace hermiweyl::cli
