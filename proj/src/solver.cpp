#include "visclimit/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "visclimit/kernels.hpp"

namespace visclimit::solver {

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("SolverConfig: cfl must be in (0, 1)");
  if (smoothing_cells < 0) throw ConfigError("SolverConfig: smoothing_cells must be >= 0");
  if (!(tau_end > 0.0)) throw ConfigError("SolverConfig: tau_end must be > 0");
  if (mode == Mode::scaled) {
    if (!(nu > 0.0)) throw ConfigError("SolverConfig: scaled mode requires nu > 0");
  } else {
    if (!(epsilon > 0.0) || !(kappa > 0.0))
      throw ConfigError("SolverConfig: physical mode requires epsilon > 0 and kappa > 0");
    const double ratio = kappa / epsilon;
    if (ratio < nu_min || ratio > nu_max)
      throw ConfigError("SolverConfig: kappa/epsilon = " + std::to_string(ratio) +
                        " outside [" + std::to_string(nu_min) + ", " + std::to_string(nu_max) +
                        "]");
  }
}

double RunReport::max_drift() const {
  return std::max({max_drift_mass, max_drift_momentum, max_drift_energy});
}

Field init_riemann(const Grid1D& grid, const gas::State& left, const gas::State& right,
                   int smoothing_cells) {
  const int n = grid.n_cells;
  Field f;
  f.tau = 0.0;
  f.v.resize(n);
  f.theta.resize(n);
  f.u.resize(n + 1);
  auto blend = [&](double y, double a, double b) {
    if (smoothing_cells == 0) return y < 0.0 ? a : (y > 0.0 ? b : 0.5 * (a + b));
    const double w = static_cast<double>(smoothing_cells) * grid.dy;
    const double s = 0.5 * (1.0 + std::tanh(2.0 * y / w));
    return a + (b - a) * s;
  };
  for (int i = 0; i < n; ++i) {
    const double y = grid.cell_center(i);
    f.v[i] = blend(y, left.v, right.v);
    f.theta[i] = blend(y, left.theta, right.theta);
  }
  for (int j = 0; j <= n; ++j) f.u[j] = blend(grid.node_pos(j), left.u, right.u);
  return f;
}

double stable_dt(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
                 const Field& f) {
  const auto& K = kernels::active();
  const int n = grid.n_cells;
  const double lam_max = K.max_lambda(f.v.data(), f.theta.data(), g.gamma * g.R, n);
  const double v_min = K.min_val(f.v.data(), n);
  const double mu = cfg.visc_coef(), kap = cfg.heat_coef();
  const double dy2v = grid.dy * grid.dy * v_min;
  const double acoustic = grid.dy / lam_max;
  const double momentum = dy2v / (2.0 * std::max(mu, kap));
  const double energy = dy2v * g.R / (2.0 * kap * (g.gamma - 1.0));
  return cfg.cfl * std::min({acoustic, momentum, energy});
}

namespace {

struct Workspace {
  std::vector<double> g, p, sig, er, q, ku, kth;       // stage RHS
  std::vector<double> v1, th1, u1;                     // stage state
  std::vector<double> sv, su, sth;                     // sources
  void resize(int n) {
    g.resize(n);
    p.resize(n);
    sig.resize(n);
    er.resize(n);
    q.resize(n + 1);
    ku.assign(n + 1, 0.0);
    kth.resize(n);
    v1.resize(n);
    th1.resize(n);
    u1.resize(n + 1);
    sv.resize(n);
    su.resize(n + 1);
    sth.resize(n);
  }
};

struct StageFlux {
  double mass, momentum, energy;
};

// Fills ws.(g,p,sig,er,q,ku,kth) for the state (v, th, u) and returns the
// boundary fluxes of the three conserved sums.
StageFlux eval_rhs(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
                   const gas::State& left, const gas::State& right, double stage_tau,
                   const std::vector<double>& v, const std::vector<double>& th,
                   const std::vector<double>& u, Workspace& ws, const SourceHook* src) {
  const auto& K = kernels::active();
  const int n = grid.n_cells;
  const double inv_dy = 1.0 / grid.dy;
  const double mu = cfg.visc_coef(), kap = cfg.heat_coef();
  const double kap2 = 2.0 * kap * inv_dy;

  K.cell_rhs(u.data(), v.data(), th.data(), inv_dy, g.R, mu, ws.g.data(), ws.p.data(),
             ws.sig.data(), ws.er.data(), n);
  K.node_rhs(ws.p.data(), ws.sig.data(), v.data(), th.data(), inv_dy, kap2, ws.ku.data() + 1,
             ws.q.data() + 1, n - 1);
  // Ghost cells hold the far-field constants.
  ws.q[0] = kap2 * (th[0] - left.theta) / (v[0] + left.v);
  ws.q[n] = kap2 * (right.theta - th[n - 1]) / (right.v + v[n - 1]);
  ws.ku[0] = 0.0;
  ws.ku[n] = 0.0;
  K.cell_energy(ws.er.data(), ws.q.data(), inv_dy, (g.gamma - 1.0) / g.R, ws.kth.data(), n);

  if (src) {
    std::fill(ws.sv.begin(), ws.sv.end(), 0.0);
    std::fill(ws.su.begin(), ws.su.end(), 0.0);
    std::fill(ws.sth.begin(), ws.sth.end(), 0.0);
    src->eval(stage_tau, ws.sv, ws.su, ws.sth);
    const double gm1_over_R = (g.gamma - 1.0) / g.R;
    for (int i = 0; i < n; ++i) {
      ws.g[i] += ws.sv[i];
      ws.kth[i] += gm1_over_R * ws.sth[i];
    }
    for (int j = 1; j < n; ++j) ws.ku[j] += ws.su[j];
  }

  StageFlux flux;
  flux.mass = u[n] - u[0];
  flux.momentum = (ws.sig[n - 1] - ws.p[n - 1]) - (ws.sig[0] - ws.p[0]);
  flux.energy = (ws.q[n] - ws.q[0]) + (ws.sig[n - 1] - ws.p[n - 1]) * u[n] -
                (ws.sig[0] - ws.p[0]) * u[0];
  return flux;
}

void check_positive(const Grid1D& grid, const std::vector<double>& v,
                    const std::vector<double>& th, double tau) {
  const auto& K = kernels::active();
  const int n = grid.n_cells;
  if (K.min_val(v.data(), n) > 0.0 && K.min_val(th.data(), n) > 0.0) return;
  for (int i = 0; i < n; ++i) {
    if (!(v[i] > 0.0))
      throw PositivityError("solver: v <= 0 at tau=" + std::to_string(tau) +
                                ", y=" + std::to_string(grid.cell_center(i)),
                            tau, grid.cell_center(i));
    if (!(th[i] > 0.0))
      throw PositivityError("solver: theta <= 0 at tau=" + std::to_string(tau) +
                                ", y=" + std::to_string(grid.cell_center(i)),
                            tau, grid.cell_center(i));
  }
}

struct Sums {
  double mass, momentum, energy;
};

Sums conserved_sums(const Grid1D& grid, const gas::GasParams& g, const Field& f) {
  const int n = grid.n_cells;
  double sv = 0.0, se = 0.0;
  for (int i = 0; i < n; ++i) {
    sv += f.v[i];
    se += f.theta[i];
  }
  se *= g.R / (g.gamma - 1.0);
  double su = 0.5 * (f.u[0] + f.u[n]);
  double sk = 0.25 * (f.u[0] * f.u[0] + f.u[n] * f.u[n]);
  for (int j = 1; j < n; ++j) {
    su += f.u[j];
    sk += 0.5 * f.u[j] * f.u[j];
  }
  return {sv * grid.dy, su * grid.dy, (se + sk) * grid.dy};
}

void step_impl(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
               const gas::State& left, const gas::State& right, Field& f, double dt,
               Workspace& ws, const SourceHook* src, double* drift) {
  const auto& K = kernels::active();
  const int n = grid.n_cells;

  Sums before{};
  if (drift) before = conserved_sums(grid, g, f);

  const StageFlux f1 =
      eval_rhs(grid, g, cfg, left, right, f.tau, f.v, f.theta, f.u, ws, src);
  K.axpy_to(f.v.data(), ws.g.data(), dt, ws.v1.data(), n);
  K.axpy_to(f.theta.data(), ws.kth.data(), dt, ws.th1.data(), n);
  ws.u1[0] = f.u[0];
  ws.u1[n] = f.u[n];
  K.axpy_to(f.u.data() + 1, ws.ku.data() + 1, dt, ws.u1.data() + 1, n - 1);
  check_positive(grid, ws.v1, ws.th1, f.tau + dt);

  const StageFlux f2 =
      eval_rhs(grid, g, cfg, left, right, f.tau + dt, ws.v1, ws.th1, ws.u1, ws, src);
  K.heun_avg(f.v.data(), ws.v1.data(), ws.g.data(), dt, f.v.data(), n);
  K.heun_avg(f.theta.data(), ws.th1.data(), ws.kth.data(), dt, f.theta.data(), n);
  K.heun_avg(f.u.data() + 1, ws.u1.data() + 1, ws.ku.data() + 1, dt, f.u.data() + 1, n - 1);
  f.tau += dt;
  check_positive(grid, f.v, f.theta, f.tau);

  if (drift) {
    const Sums after = conserved_sums(grid, g, f);
    const double half_dt = 0.5 * dt;
    drift[0] = std::abs(after.mass - before.mass - half_dt * (f1.mass + f2.mass)) /
               std::max(1.0, std::abs(before.mass));
    drift[1] =
        std::abs(after.momentum - before.momentum - half_dt * (f1.momentum + f2.momentum)) /
        std::max(1.0, std::abs(before.momentum));
    drift[2] = std::abs(after.energy - before.energy - half_dt * (f1.energy + f2.energy)) /
               std::max(1.0, std::abs(before.energy));
  }
}

void check_boundary(const Grid1D& grid, const gas::State& left, const gas::State& right,
                    const Field& f) {
  const int n = grid.n_cells;
  const double tol = 1e-6;
  for (int k = 0; k < 5; ++k) {
    if (std::abs(f.v[k] - left.v) > tol || std::abs(f.theta[k] - left.theta) > tol ||
        std::abs(f.u[k] - left.u) > tol || std::abs(f.v[n - 1 - k] - right.v) > tol ||
        std::abs(f.theta[n - 1 - k] - right.theta) > tol ||
        std::abs(f.u[n - k] - right.u) > tol)
      throw BoundaryTouchError("solver: wave reached the frozen boundary at tau=" +
                                   std::to_string(f.tau),
                               f.tau);
  }
}

}  // namespace

void step(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
          const gas::State& left, const gas::State& right, Field& f, double dt,
          const SourceHook* src, double* drift) {
  Workspace ws;
  ws.resize(grid.n_cells);
  step_impl(grid, g, cfg, left, right, f, dt, ws, src, drift);
}

IntegrateResult integrate(const Grid1D& grid, const gas::GasParams& g, const SolverConfig& cfg,
                          const gas::State& left, const gas::State& right,
                          const SourceHook* src) {
  cfg.validate();
  // Waves must stay well inside the domain for the whole run.
  const double lam_max = std::max(std::abs(gas::lambda(g, left, 1)), gas::lambda(g, right, 3));
  const double reach = cfg.mode == Mode::scaled
                           ? lam_max * (1.0 + cfg.tau_end) + 10.0
                           : lam_max * (cfg.epsilon + cfg.tau_end) + 10.0 * cfg.epsilon;
  if (reach >= grid.half_width)
    throw ConfigError("integrate: domain too small; waves reach |y| ~ " + std::to_string(reach) +
                      " but L = " + std::to_string(grid.half_width));

  const auto t_start = std::chrono::steady_clock::now();
  IntegrateResult res;
  Field f = init_riemann(grid, left, right, cfg.smoothing_cells);
  Workspace ws;
  ws.resize(grid.n_cells);

  std::vector<double> wanted = cfg.snapshot_times;
  std::sort(wanted.begin(), wanted.end());
  size_t next = 0;
  while (next < wanted.size() && wanted[next] <= 0.0) {
    res.snapshots.push_back(f);
    ++next;
  }

  Field prev = f;
  RunReport& rep = res.report;
  rep.dt_min = std::numeric_limits<double>::infinity();
  double drift[3];
  try {
    while (f.tau < cfg.tau_end) {
      const double dt = stable_dt(grid, g, cfg, f);
      const bool near_snapshot = next < wanted.size() && f.tau + dt >= wanted[next];
      if (near_snapshot) prev = f;
      step_impl(grid, g, cfg, left, right, f, dt, ws, src, drift);
      ++rep.steps;
      rep.dt_min = std::min(rep.dt_min, dt);
      rep.dt_max = std::max(rep.dt_max, dt);
      rep.max_drift_mass = std::max(rep.max_drift_mass, drift[0]);
      rep.max_drift_momentum = std::max(rep.max_drift_momentum, drift[1]);
      rep.max_drift_energy = std::max(rep.max_drift_energy, drift[2]);
      check_boundary(grid, left, right, f);
      while (next < wanted.size() && f.tau >= wanted[next]) {
        const bool prev_closer = wanted[next] - prev.tau < f.tau - wanted[next];
        res.snapshots.push_back(prev_closer ? prev : f);
        ++next;
      }
    }
  } catch (const PositivityError& e) {
    rep.status = "positivity-abort";
    rep.detail = e.what();
  } catch (const BoundaryTouchError& e) {
    rep.status = "boundary-abort";
    rep.detail = e.what();
  }
  rep.tau_final = f.tau;
  if (rep.steps == 0) rep.dt_min = 0.0;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return res;
}

}  // namespace visclimit::solver
