#pragma once

#include <limits>
#include <string>
#include <vector>

#include "visclimit/profiles.hpp"
#include "visclimit/solver.hpp"

namespace visclimit::harness {

// Space-time region of the uniform-convergence claim: t >= h and
// |x|/sqrt(epsilon + t) >= h epsilon^alpha. symmetric=false restores the
// literal one-sided reading (x instead of |x|).
struct SigmaRegion {
  double h;
  double alpha;
  double epsilon;
  bool symmetric = true;

  SigmaRegion(double h_, double alpha_, double epsilon_, bool symmetric_ = true)
      : h(h_), alpha(alpha_), epsilon(epsilon_), symmetric(symmetric_) {
    if (!(h > 0.0) || !(alpha >= 0.0 && alpha < 0.5) || !(epsilon > 0.0))
      throw Error("SigmaRegion: require h > 0, 0 <= alpha < 1/2, epsilon > 0");
  }
  bool contains(double t, double x) const {
    if (t < h) return false;
    const double lhs = (symmetric ? std::abs(x) : x) / std::sqrt(epsilon + t);
    return lhs >= h * std::pow(epsilon, alpha);
  }
};

// Carrier for decaying diagnostics: values sampled at increasing times,
// with the slope of the log-fit (negative = decay) and its R^2.
struct DecaySeries {
  std::vector<double> times;
  std::vector<double> values;
  // NaN until a fit window with at least two positive values exists.
  double fitted_rate = std::numeric_limits<double>::quiet_NaN();
  double fit_quality = std::numeric_limits<double>::quiet_NaN();
  bool floored = false;  // series truncated at the resolution floor
};

// Max over snapshots (t >= h) and in-region grid points of the
// componentwise difference to the exact Euler solution. Throws
// EmptyRegionError when no point qualifies.
double sup_error_sigma(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                       const riemann::RiemannPattern& pattern, const SigmaRegion& region);

// Per snapshot, sup over the grid of the componentwise difference to the
// superposed profile; log-log fit of the tail half (after tau >= fit_tau_min).
DecaySeries asymptotic_gap(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                           const profiles::WaveProfileSet& set, double fit_tau_min = 5.0);

enum class JumpKind { specific_volume, velocity_gradient, temperature_gradient };

// Discrete interface jump per snapshot with exponential fit
// ln|[.]| vs tau over [fit_tau_min, fit_tau_max] (default tau_last/2).
// Values below the floor truncate the series.
DecaySeries jump_series(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                        JumpKind kind = JumpKind::specific_volume, double fit_tau_min = 5.0,
                        double fit_tau_max = -1.0, double floor = 1e-12);

// The computable pieces of the perturbation norm N(tau): discrete L2 of
// (phi, psi, zeta), piecewise L2 of the y-derivatives (the cell pair
// straddling y = 0 is excluded), and the sup norm.
struct PerturbationNorms {
  double l2 = 0.0;
  double l2_deriv = 0.0;
  double linf = 0.0;
};

PerturbationNorms perturbation_norms(const solver::Field& snapshot, const solver::Grid1D& grid,
                                     const profiles::WaveProfileSet& set);

struct LimitSweepConfig {
  LimitSweepConfig(const gas::GasParams& g_, const gas::State& left_, const gas::State& right_)
      : g(g_), left(left_), right(right_) {}
  gas::GasParams g;
  gas::State left, right;
  double nu = 1.0;
  double cfl = 0.4;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  double half_width = 2.5;   // physical domain half-width
  double dy_scaled = 0.05;   // scaled resolution held constant across the sweep
  int smoothing_cells = 0;
  double h = 0.5;
  double alpha = 0.25;
  bool symmetric = true;
  double nu_min = 0.01, nu_max = 100.0;
  int max_threads = 0;  // 0: VISCLIMIT_THREADS or hardware concurrency
};

struct SweepRow {
  double epsilon, kappa, nu, h, alpha;
  double sup_error;  // NaN when the run aborted
  int n_cells;
  long steps;
  double drift;
  std::string status;
  double wall_seconds;
};

// One physical-mode run per epsilon (kappa = nu epsilon), grid scaled so
// dy_physical = epsilon dy_scaled. Rows run concurrently; aborted rows are
// flagged and the sweep continues.
std::vector<SweepRow> limit_sweep(const LimitSweepConfig& cfg, std::vector<double> epsilons);

}  // namespace visclimit::harness
