#include "visclimit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "visclimit/io.hpp"
#include "visclimit/kernels.hpp"

namespace visclimit::cli {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string snapshot_name(double tau) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_%.6f.csv", tau);
  return buf;
}

void print_pattern(const riemann::RiemannPattern& pat) {
  auto line = [](const char* name, const gas::State& s) {
    std::printf("%-12s v=%-22.15g u=%-22.15g theta=%-22.15g\n", name, s.v, s.u, s.theta);
  };
  line("left", pat.left);
  line("star", pat.star);
  line("star_upper", pat.star_upper);
  line("right", pat.right);
  std::printf("p_contact    %.17g\n", pat.p_contact);
  const double dp = std::abs(gas::pressure(pat.g, pat.star) - gas::pressure(pat.g, pat.star_upper));
  std::printf("|p*-p^*|     %.3g\n", dp);
  std::printf("|u*-u^*|     %.3g\n", pat.solve_residual);
  std::printf("fan1         head=%.15g tail=%.15g\n", pat.fan1.head, pat.fan1.tail);
  std::printf("fan3         head=%.15g tail=%.15g\n", pat.fan3.head, pat.fan3.tail);
}

std::vector<std::pair<std::string, std::string>> report_keys(const solver::Grid1D& grid,
                                                             const solver::SolverConfig& cfg,
                                                             const solver::RunReport& rep) {
  std::vector<std::pair<std::string, std::string>> keys;
  keys.emplace_back("L", fmt17(grid.half_width));
  keys.emplace_back("n_cells", std::to_string(grid.n_cells));
  keys.emplace_back("dy", fmt17(grid.dy));
  keys.emplace_back("mode", cfg.mode == solver::Mode::scaled ? "scaled" : "physical");
  keys.emplace_back("nu", fmt17(cfg.nu));
  keys.emplace_back("epsilon", fmt17(cfg.epsilon));
  keys.emplace_back("kappa", fmt17(cfg.kappa));
  keys.emplace_back("cfl", fmt17(cfg.cfl));
  keys.emplace_back("smoothing_cells", std::to_string(cfg.smoothing_cells));
  keys.emplace_back("tau_end", fmt17(cfg.tau_end));
  keys.emplace_back("steps", std::to_string(rep.steps));
  keys.emplace_back("tau_final", fmt17(rep.tau_final));
  keys.emplace_back("dt_min", fmt17(rep.dt_min));
  keys.emplace_back("dt_max", fmt17(rep.dt_max));
  keys.emplace_back("drift_mass", fmt17(rep.max_drift_mass));
  keys.emplace_back("drift_momentum", fmt17(rep.max_drift_momentum));
  keys.emplace_back("drift_energy", fmt17(rep.max_drift_energy));
  keys.emplace_back("status", rep.status);
  if (!rep.detail.empty()) keys.emplace_back("detail", rep.detail);
  keys.emplace_back("wall_seconds", fmt17(rep.wall_seconds));
  keys.emplace_back("kernels", kernels::active().name);
  return keys;
}

}  // namespace

int cmd_riemann(const RunSpec& spec, const std::string& out_dir) {
  const gas::GasParams g = spec.gas_params();
  const riemann::RiemannPattern pat =
      riemann::solve_pattern(g, spec.left_state(), spec.right_state());
  print_pattern(pat);
  if (spec.dump_t > 0.0) {
    ensure_dir(out_dir);
    double xmax = spec.dump_xmax;
    if (xmax <= 0.0)
      xmax = 1.2 * std::max(std::abs(pat.fan1.head), pat.fan3.tail) * spec.dump_t + 1.0;
    std::vector<double> xs(spec.dump_nx);
    for (int i = 0; i < spec.dump_nx; ++i)
      xs[i] = -xmax + 2.0 * xmax * static_cast<double>(i) / (spec.dump_nx - 1);
    write_exact_csv(join(out_dir, "exact.csv"), pat, spec.dump_t, xs);
    std::printf("wrote %s\n", join(out_dir, "exact.csv").c_str());
  }
  return kExitOk;
}

int cmd_profile(const RunSpec& spec, const std::string& out_dir) {
  const gas::GasParams g = spec.gas_params();
  const riemann::RiemannPattern pat =
      riemann::solve_pattern(g, spec.left_state(), spec.right_state());
  profiles::SelfSimilarOptions opts;
  opts.n_points = spec.bvp_points;
  opts.xi_halfwidth = spec.bvp_xi;
  const profiles::WaveProfileSet set = profiles::build_wave_profile_set(g, spec.nu, pat, opts);
  ensure_dir(out_dir);
  const solver::Grid1D grid(spec.L, spec.n_cells);
  std::vector<double> ys(grid.n_cells);
  for (int i = 0; i < grid.n_cells; ++i) ys[i] = grid.cell_center(i);
  write_profile_csv(join(out_dir, "profile.csv"), set, spec.tau_list, ys);
  std::printf("wrote %s\n", join(out_dir, "profile.csv").c_str());
  return kExitOk;
}

int cmd_solve(const RunSpec& spec, const std::string& out_dir) {
  const gas::GasParams g = spec.gas_params();
  const solver::Grid1D grid(spec.L, spec.n_cells);
  const solver::SolverConfig cfg = spec.solver_config();
  const solver::IntegrateResult res =
      solver::integrate(grid, g, cfg, spec.left_state(), spec.right_state());
  ensure_dir(out_dir);
  for (const solver::Field& f : res.snapshots)
    write_snapshot_csv(join(out_dir, snapshot_name(f.tau)), grid, f);
  write_report(join(out_dir, "report.txt"), report_keys(grid, cfg, res.report));
  std::printf("%s after %ld steps (tau=%g), %zu snapshots, report in %s\n",
              res.report.status.c_str(), res.report.steps, res.report.tau_final,
              res.snapshots.size(), join(out_dir, "report.txt").c_str());
  return res.report.ok() ? kExitOk : kExitAbort;
}

int cmd_limit(const RunSpec& spec, const std::string& out_dir) {
  std::vector<double> eps = spec.epsilons;
  if (eps.empty()) throw ConfigError("limit: empty epsilon list");
  std::vector<double> dedup;
  for (double e : eps) {
    if (std::find(dedup.begin(), dedup.end(), e) != dedup.end()) {
      std::fprintf(stderr, "warning: duplicate epsilon %.17g dropped\n", e);
      continue;
    }
    dedup.push_back(e);
  }

  harness::LimitSweepConfig cfg{spec.gas_params(), spec.left_state(), spec.right_state()};
  cfg.nu = spec.nu;
  cfg.cfl = spec.cfl;
  cfg.t_end = spec.tau_end;
  cfg.snapshot_times = spec.snapshot_times;
  cfg.half_width = spec.L;
  cfg.dy_scaled = spec.dy_scaled;
  cfg.smoothing_cells = spec.smoothing_cells;
  cfg.h = spec.h;
  cfg.alpha = spec.alpha;
  cfg.symmetric = spec.sigma_symmetric;
  cfg.nu_min = spec.nu_min;
  cfg.nu_max = spec.nu_max;

  const std::vector<harness::SweepRow> rows = harness::limit_sweep(cfg, dedup);
  ensure_dir(out_dir);
  write_sweep_csv(join(out_dir, "sweep.csv"), rows);
  int ok_rows = 0;
  for (const auto& r : rows) {
    std::printf("epsilon=%-10.5g n=%-7d steps=%-9ld sup_error=%-14.6g status=%s\n", r.epsilon,
                r.n_cells, r.steps, r.sup_error, r.status.c_str());
    if (r.status == "ok") ++ok_rows;
  }
  std::printf("wrote %s\n", join(out_dir, "sweep.csv").c_str());
  return ok_rows > 0 ? kExitOk : kExitAbort;
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"viscous wave patterns and the small-viscosity limit of 1-D "
               "Lagrangian compressible Navier-Stokes flows"};
  app.require_subcommand(1);

  struct Common {
    std::string config;
    std::string out = "out";
    std::vector<std::string> overrides;
  };
  Common common;
  std::string chosen;
  for (const char* name : {"riemann", "profile", "solve", "limit"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", common.config, "key=value config file");
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--override", common.overrides, "key=value override (repeatable)");
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    const RunSpec spec = parse_runspec(common.config, common.overrides);
    kernels::select(spec.kernels);
    if (chosen == "riemann") return cmd_riemann(spec, common.out);
    if (chosen == "profile") return cmd_profile(spec, common.out);
    if (chosen == "solve") return cmd_solve(spec, common.out);
    if (chosen == "limit") return cmd_limit(spec, common.out);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const PatternClassError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const NoBracketError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitAbort;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace visclimit::cli
