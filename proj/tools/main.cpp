#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hermiweyl/errors.hpp"

using namespace hermiweyl;
using namespace hermiweyl::cli;

int main(int argc, char** argv) {
  CLI::App app{"Two-variable Hermite polynomials, Weyl symbols and Wigner functions"};
  app.set_config("--config", "", "key=value file overriding option defaults");
  app.require_subcommand(1);
  RunConfig config;

  auto positive = CLI::PositiveNumber;

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite and write the ledger CSV");
  verify->add_option("--max-order", config.max_order, "largest m and n")->check(CLI::NonNegativeNumber);
  verify->add_option("--g2-max-order", config.g2_max_order, "largest order for the g2 routes")
      ->check(CLI::Range(0, 3));
  verify->add_option("--dim", config.dim, "Fock dimension of the g2 oracle (default 64)")->check(positive);
  verify->add_option("--tolerance", config.tolerance, "shape tolerance (default 1e-7)")->check(positive);
  verify->add_option("--params", config.params, "mu,nu,sigma,tau; repeatable, replaces the default sets");
  verify->add_option("--seed", config.seed, "seed for --random");
  verify->add_option("--random", config.random_sets, "extra seeded real-positive parameter sets")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--out", config.out, "ledger path (default ledger.csv)");

  CLI::App* hermite = app.add_subcommand("hermite", "evaluate H_{m,n}(alpha, alpha*) by three routes");
  hermite->add_option("m", config.m)->required()->check(CLI::NonNegativeNumber);
  hermite->add_option("n", config.n)->required()->check(CLI::NonNegativeNumber);
  hermite->add_option("--alpha", config.alpha, "complex point, e.g. 0.3-1.2i");

  CLI::App* symbol = app.add_subcommand("symbol", "Weyl symbol of a Fock-space operator");
  symbol->add_option("--op", config.op, "identity, a, adag, number, projector or normal")
      ->check(CLI::IsMember({"identity", "a", "adag", "number", "projector", "normal"}));
  symbol->add_option("--m", config.m, "row index or power of a^dagger")->check(CLI::NonNegativeNumber);
  symbol->add_option("--n", config.n, "column index or power of a")->check(CLI::NonNegativeNumber);
  symbol->add_option("--alpha", config.alpha, "complex point");
  symbol->add_option("--dim", config.dim, "Fock dimension (default 64)")->check(positive);

  CLI::App* wigner = app.add_subcommand("wigner", "Wigner grid of the excited squeezed vacuum");
  wigner->add_option("--r", config.r, "squeezing parameter");
  wigner->add_option("--n", config.n_add, "photons added")->check(CLI::Range(0, 6));
  wigner->add_option("--grid", config.grid, "NXxNY samples (default 201x201)");
  wigner->add_option("--window", config.window, "half-width of the square window")->check(positive);
  wigner->add_option("--dim", config.dim, "Fock dimension (default 96)")->check(positive);
  wigner->add_option("--tolerance", config.tolerance, "closed-form versus oracle tolerance (default 1e-5)")
      ->check(positive);
  wigner->add_option("--out", config.out, "grid CSV path (default wigner.csv)");
  wigner->add_option("--pixmap", config.pixmap, "optional P6 heatmap path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(config, std::cout);
    if (hermite->parsed()) return cmd_hermite(config, std::cout);
    if (symbol->parsed()) return cmd_symbol(config, std::cout);
    return cmd_wigner(config, std::cout);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OrderOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BranchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}
