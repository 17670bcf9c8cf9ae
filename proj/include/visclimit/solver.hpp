#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "visclimit/gas.hpp"

namespace visclimit::solver {

// Staggered 1-D grid on [-L, L]: v and theta live on cell centers, u on
// nodes. n_cells is even so that y = 0 is a node and the initial
// discontinuity sits exactly on it.
struct Grid1D {
  double half_width;
  int n_cells;
  double dy;

  Grid1D(double half_width_, int n_cells_) : half_width(half_width_), n_cells(n_cells_) {
    if (!(half_width > 0.0) || n_cells < 8 || n_cells % 2 != 0)
      throw Error("Grid1D: require L > 0 and even n_cells >= 8");
    dy = 2.0 * half_width / static_cast<double>(n_cells);
  }
  double cell_center(int i) const { return -half_width + (static_cast<double>(i) + 0.5) * dy; }
  double node_pos(int j) const { return -half_width + static_cast<double>(j) * dy; }
  int interface_node() const { return n_cells / 2; }
};

enum class Mode { scaled, physical };

struct SolverConfig {
  Mode mode = Mode::scaled;
  double nu = 1.0;                   // scaled mode heat conductivity
  double epsilon = 0.0, kappa = 0.0;  // physical mode coefficients
  double cfl = 0.4;
  int smoothing_cells = 0;
  double tau_end = 1.0;
  std::vector<double> snapshot_times;
  double nu_min = 0.01, nu_max = 100.0;  // admissible kappa/epsilon band

  double visc_coef() const { return mode == Mode::scaled ? 1.0 : epsilon; }
  double heat_coef() const { return mode == Mode::scaled ? nu : kappa; }
  void validate() const;
};

// One time level. v and theta have n_cells entries, u has n_cells + 1.
struct Field {
  double tau = 0.0;
  std::vector<double> v, theta, u;
};

// Riemann data on the grid; cells strictly left of 0 take the left state.
// smoothing_cells > 0 replaces the jump by a tanh ramp of that width.
Field init_riemann(const Grid1D& grid, const gas::State& left, const gas::State& right,
                   int smoothing_cells = 0);

// Acoustic CFL plus the two parabolic limits:
// dt = cfl min(dy/max|lambda|, dy^2 min(v)/(2 max(mu, kap)),
//              dy^2 min(v) R/(2 kap (gamma-1))).
double stable_dt(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
                 const Field& f);

// Optional forcing hook (manufactured-solution runs): fills per-cell mass
// and energy sources and per-node momentum sources at the stage time.
// Source conventions match the equations as written: v_tau - u_y = sv,
// u_tau + p_y - (mu u_y/v)_y = su,
// (R/(gamma-1)) theta_tau + p u_y - kap (theta_y/v)_y - mu u_y^2/v = sth.
struct SourceHook {
  std::function<void(double tau, std::span<double> sv, std::span<double> su,
                     std::span<double> sth)>
      eval;
};

struct RunReport {
  long steps = 0;
  double tau_final = 0.0;
  double dt_min = 0.0, dt_max = 0.0;
  double max_drift_mass = 0.0, max_drift_momentum = 0.0, max_drift_energy = 0.0;
  std::string status = "ok";  // ok | positivity-abort | boundary-abort
  std::string detail;
  double wall_seconds = 0.0;
  bool ok() const { return status == "ok"; }
  double max_drift() const;
};

struct IntegrateResult {
  std::vector<Field> snapshots;
  RunReport report;
};

// One two-stage (Heun) step of the staggered semi-discretization. Far-field
// values are frozen; throws PositivityError when v or theta goes
// non-positive. drift, when non-null, receives the per-step relative
// conservation drifts (mass, momentum, energy).
void step(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
          const gas::State& left, const gas::State& right, Field& f, double dt,
          const SourceHook* src = nullptr, double* drift = nullptr);

// March from tau = 0 to tau_end storing snapshots at the completed step
// nearest each requested time. Positivity and boundary-touch aborts are
// reported in the result status rather than thrown.
IntegrateResult integrate(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
                          const gas::State& left, const gas::State& right,
                          const SourceHook* src = nullptr);

}  // namespace visclimit::solver
