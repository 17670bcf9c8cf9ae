#include "visclimit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "visclimit/numerics.hpp"

namespace visclimit::harness {

double sup_error_sigma(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                       const riemann::RiemannPattern& pattern, const SigmaRegion& region) {
  double sup = 0.0;
  long count = 0;
  for (const solver::Field& f : snapshots) {
    if (f.tau < region.h) continue;
    for (int i = 0; i < grid.n_cells; ++i) {
      const double x = grid.cell_center(i);
      if (!region.contains(f.tau, x)) continue;
      const gas::State ex = riemann::eval_exact(pattern, f.tau, x);
      sup = std::max({sup, std::abs(f.v[i] - ex.v), std::abs(f.theta[i] - ex.theta)});
      ++count;
    }
    for (int j = 0; j <= grid.n_cells; ++j) {
      const double x = grid.node_pos(j);
      if (!region.contains(f.tau, x)) continue;
      const gas::State ex = riemann::eval_exact(pattern, f.tau, x);
      sup = std::max(sup, std::abs(f.u[j] - ex.u));
      ++count;
    }
  }
  if (count == 0)
    throw EmptyRegionError("sup_error_sigma: no grid point lies in the requested region");
  return sup;
}

namespace {

void fit_log_series(DecaySeries& s, bool log_abscissa, double tau_min, double tau_max) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < tau_min || s.times[i] > tau_max) continue;
    if (!(s.values[i] > 0.0)) continue;
    xs.push_back(log_abscissa ? std::log(1.0 + s.times[i]) : s.times[i]);
    ys.push_back(std::log(s.values[i]));
  }
  if (xs.size() >= 2) {
    const num::LinFit fit = num::linfit(xs, ys);
    s.fitted_rate = fit.slope;
    s.fit_quality = fit.r2;
  }
}

}  // namespace

DecaySeries asymptotic_gap(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                           const profiles::WaveProfileSet& set, double fit_tau_min) {
  DecaySeries s;
  for (const solver::Field& f : snapshots) {
    double sup = 0.0;
    for (int i = 0; i < grid.n_cells; ++i) {
      const profiles::WavePartials w = profiles::superposition_eval(set, f.tau, grid.cell_center(i));
      sup = std::max({sup, std::abs(f.v[i] - w.V), std::abs(f.theta[i] - w.Th)});
    }
    for (int j = 0; j <= grid.n_cells; ++j) {
      const profiles::WavePartials w = profiles::superposition_eval(set, f.tau, grid.node_pos(j));
      sup = std::max(sup, std::abs(f.u[j] - w.U));
    }
    s.times.push_back(f.tau);
    s.values.push_back(sup);
  }
  const double tau_last = s.times.empty() ? 0.0 : s.times.back();
  fit_log_series(s, /*log_abscissa=*/true, std::max(fit_tau_min, 0.5 * tau_last), tau_last);
  return s;
}

DecaySeries jump_series(const std::vector<solver::Field>& snapshots, const solver::Grid1D& grid,
                        JumpKind kind, double fit_tau_min, double fit_tau_max, double floor) {
  DecaySeries s;
  if (snapshots.empty()) return s;
  const int j0 = grid.interface_node();  // node at y = 0
  const int ir = j0;                     // cell just right of 0
  const int il = j0 - 1;                 // cell just left of 0
  const double inv_dy = 1.0 / grid.dy;
  for (const solver::Field& f : snapshots) {
    double jump = 0.0;
    switch (kind) {
      case JumpKind::specific_volume:
        jump = f.v[ir] - f.v[il];
        break;
      case JumpKind::velocity_gradient:
        jump = (f.u[j0 + 1] - f.u[j0]) * inv_dy - (f.u[j0] - f.u[j0 - 1]) * inv_dy;
        break;
      case JumpKind::temperature_gradient:
        jump = (f.theta[ir + 1] - f.theta[ir]) * inv_dy - (f.theta[il] - f.theta[il - 1]) * inv_dy;
        break;
    }
    if (std::abs(jump) < floor) {
      s.floored = true;
      break;
    }
    s.times.push_back(f.tau);
    s.values.push_back(std::abs(jump));
  }
  if (fit_tau_max <= 0.0)
    fit_tau_max = snapshots.empty() ? 0.0 : 0.5 * snapshots.back().tau;
  fit_log_series(s, /*log_abscissa=*/false, fit_tau_min, fit_tau_max);
  return s;
}

PerturbationNorms perturbation_norms(const solver::Field& f, const solver::Grid1D& grid,
                                     const profiles::WaveProfileSet& set) {
  const int n = grid.n_cells;
  const double dy = grid.dy;
  std::vector<double> phi(n), zeta(n), psi(n + 1);
  for (int i = 0; i < n; ++i) {
    const profiles::WavePartials w = profiles::superposition_eval(set, f.tau, grid.cell_center(i));
    phi[i] = f.v[i] - w.V;
    zeta[i] = f.theta[i] - w.Th;
  }
  for (int j = 0; j <= n; ++j) {
    const profiles::WavePartials w = profiles::superposition_eval(set, f.tau, grid.node_pos(j));
    psi[j] = f.u[j] - w.U;
  }

  PerturbationNorms out;
  double l2 = 0.0, linf = 0.0;
  for (int i = 0; i < n; ++i) {
    l2 += phi[i] * phi[i] + zeta[i] * zeta[i];
    linf = std::max({linf, std::abs(phi[i]), std::abs(zeta[i])});
  }
  for (int j = 0; j <= n; ++j) {
    const double w = (j == 0 || j == n) ? 0.5 : 1.0;
    l2 += w * psi[j] * psi[j];
    linf = std::max(linf, std::abs(psi[j]));
  }
  out.l2 = std::sqrt(l2 * dy);
  out.linf = linf;

  // Piecewise derivative norm: skip the difference across the interface
  // node for the cell-centered fields.
  const int skip = grid.interface_node() - 1;  // pair (skip, skip+1) straddles y = 0
  double l2d = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    if (i == skip) continue;
    const double dphi = (phi[i + 1] - phi[i]) / dy;
    const double dzeta = (zeta[i + 1] - zeta[i]) / dy;
    l2d += dphi * dphi + dzeta * dzeta;
  }
  for (int j = 0; j < n; ++j) {
    const double dpsi = (psi[j + 1] - psi[j]) / dy;
    l2d += dpsi * dpsi;
  }
  out.l2_deriv = std::sqrt(l2d * dy);
  return out;
}

namespace {

int resolve_threads(int requested, int rows) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("VISCLIMIT_THREADS")) t = std::atoi(env);
  }
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  return std::min(t, rows);
}

}  // namespace

std::vector<SweepRow> limit_sweep(const LimitSweepConfig& cfg, std::vector<double> epsilons) {
  if (epsilons.empty()) throw ConfigError("limit_sweep: empty epsilon list");
  for (double e : epsilons)
    if (!(e > 0.0)) throw ConfigError("limit_sweep: epsilons must be positive");

  const riemann::RiemannPattern pattern = riemann::solve_pattern(cfg.g, cfg.left, cfg.right);
  std::vector<SweepRow> rows(epsilons.size());

  auto run_row = [&](size_t idx) {
    const double eps = epsilons[idx];
    SweepRow& row = rows[idx];
    row.epsilon = eps;
    row.kappa = cfg.nu * eps;
    row.nu = cfg.nu;
    row.h = cfg.h;
    row.alpha = cfg.alpha;
    row.sup_error = std::numeric_limits<double>::quiet_NaN();
    int n = static_cast<int>(std::ceil(2.0 * cfg.half_width / (eps * cfg.dy_scaled)));
    if (n % 2 != 0) ++n;
    row.n_cells = n;
    try {
      const solver::Grid1D grid(cfg.half_width, n);
      solver::SolverConfig sc;
      sc.mode = solver::Mode::physical;
      sc.epsilon = eps;
      sc.kappa = cfg.nu * eps;
      sc.cfl = cfg.cfl;
      sc.smoothing_cells = cfg.smoothing_cells;
      sc.tau_end = cfg.t_end;
      sc.snapshot_times = cfg.snapshot_times;
      sc.nu_min = cfg.nu_min;
      sc.nu_max = cfg.nu_max;
      const solver::IntegrateResult res = solver::integrate(grid, cfg.g, sc, cfg.left, cfg.right);
      row.steps = res.report.steps;
      row.drift = res.report.max_drift();
      row.wall_seconds = res.report.wall_seconds;
      row.status = res.report.status;
      if (res.report.ok()) {
        const SigmaRegion region(cfg.h, cfg.alpha, eps, cfg.symmetric);
        row.sup_error = sup_error_sigma(res.snapshots, grid, pattern, region);
      }
    } catch (const EmptyRegionError&) {
      row.status = "empty-region";
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  };

  const int threads = resolve_threads(cfg.max_threads, static_cast<int>(epsilons.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < epsilons.size(); ++i) run_row(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < epsilons.size(); i = next.fetch_add(1)) run_row(i);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace visclimit::harness
