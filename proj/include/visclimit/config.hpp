#pragma once

#include <string>
#include <vector>

#include "visclimit/harness.hpp"

namespace visclimit::cli {

// Flat key=value run specification. Every field has a default; parse
// errors carry file:line (or the offending --override) plus the field.
struct RunSpec {
  // gas + Riemann data
  double gamma = 5.0 / 3.0;
  double R = 1.0;
  double left_v = 1.0, left_u = 0.0, left_theta = 1.0;
  double right_v = 1.0, right_u = 0.0, right_theta = 1.0;

  // solver
  std::string mode = "scaled";  // scaled | physical
  double nu = 1.0;
  double epsilon = 0.1, kappa = 0.1;
  double cfl = 0.4;
  int smoothing_cells = 0;
  double tau_end = 1.0;
  std::vector<double> snapshot_times;
  double L = 20.0;
  int n_cells = 512;
  double nu_min = 0.01, nu_max = 100.0;

  // Sigma region
  double h = 0.5;
  double alpha = 0.25;
  bool sigma_symmetric = true;

  // profile command
  std::vector<double> tau_list{1.0, 10.0};
  int bvp_points = 4001;
  double bvp_xi = 0.0;  // 0 = auto

  // riemann command dump (dump_t <= 0 disables)
  double dump_t = 0.0;
  int dump_nx = 401;
  double dump_xmax = 0.0;  // 0 = auto from fan speeds

  // limit command
  std::vector<double> epsilons{0.1, 0.05, 0.025};
  double dy_scaled = 0.05;

  std::string kernels = "auto";

  gas::GasParams gas_params() const;
  gas::State left_state() const;
  gas::State right_state() const;
  solver::SolverConfig solver_config() const;
};

// Parse a config file (empty path = defaults only) and apply
// "key=value" overrides on top. Unknown keys and malformed values throw
// ConfigError with file/line or override provenance.
RunSpec parse_runspec(const std::string& path, const std::vector<std::string>& overrides);

// Parse from an in-memory string; `origin` labels error messages.
RunSpec parse_runspec_text(const std::string& text, const std::string& origin,
                           const std::vector<std::string>& overrides);

}  // namespace visclimit::cli
