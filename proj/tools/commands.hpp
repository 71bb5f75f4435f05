#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hermiweyl/fock_space.hpp"

namespace hermiweyl::cli {

enum ExitCode { kPass = 0, kUsage = 1, kShapeFailure = 2, kNumericalFailure = 3 };

struct RunConfig {
  // verify
  int max_order = 5;
  int g2_max_order = 3;
  /// 0 selects the command default: 64, or 96 for wigner
  int dim = 0;
  /// identity deviation for verify, closed-versus-oracle deviation for wigner
  std::optional<double> tolerance;
  std::vector<std::string> params;
  unsigned seed = 20240611;
  int random_sets = 0;
  std::string out;
  // hermite / symbol
  int m = 0;
  int n = 0;
  std::string alpha = "0";
  std::string op = "identity";
  // wigner
  double r = 0.2;
  int n_add = 1;
  std::string grid = "201x201";
  double window = 2.5;
  std::string pixmap;
};

/// Parses "1.5", "-2e-3", "0.3+0.2i", "-i", "2.5j".
Complex parse_complex(const std::string& text);
SymplecticParams parse_params(const std::string& text);
/// "NXxNY" or "N".
std::pair<int, int> parse_grid(const std::string& text);

int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_hermite(const RunConfig& config, std::ostream& log);
int cmd_symbol(const RunConfig& config, std::ostream& log);
int cmd_wigner(const RunConfig& config, std::ostream& log);

}  // namespace hermiweyl::cli
