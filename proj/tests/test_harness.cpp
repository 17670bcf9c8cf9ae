#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "visclimit/harness.hpp"

using namespace visclimit;
using gas::GasParams;
using gas::State;
using harness::SigmaRegion;
using solver::Field;
using solver::Grid1D;
using solver::Mode;
using solver::SolverConfig;

namespace {

struct SmallRun {
  GasParams g{5.0 / 3.0, 1.0};
  testutil::PatternData data;
  riemann::RiemannPattern pattern;
  profiles::WaveProfileSet set;
  Grid1D grid;
  solver::IntegrateResult res;

  SmallRun(double tau_end, std::vector<double> snaps, int n = 2048, double L = 160.0)
      : data(testutil::make_pattern_data(g, State(1, 0, 1), 0.92, 1.06, 0.93)),
        pattern(riemann::solve_pattern(g, data.left, data.right)),
        set(profiles::build_wave_profile_set(g, 1.0, pattern)),
        grid(L, n),
        res([&] {
          SolverConfig cfg;
          cfg.nu = 1.0;
          cfg.tau_end = tau_end;
          cfg.snapshot_times = std::move(snaps);
          return solver::integrate(grid, g, cfg, data.left, data.right);
        }()) {}
};

}  // namespace

TEST_CASE("sigma region membership") {
  const SigmaRegion r(0.5, 0.25, 0.1);
  CHECK_FALSE(r.contains(0.4, 5.0));               // t below h
  CHECK(r.contains(1.0, 5.0));
  CHECK(r.contains(1.0, -5.0));                    // symmetric default
  CHECK_FALSE(r.contains(1.0, 0.01));              // contact neighborhood excluded
  const SigmaRegion one_sided(0.5, 0.25, 0.1, false);
  CHECK_FALSE(one_sided.contains(1.0, -5.0));      // literal reading drops x < 0
  CHECK(one_sided.contains(1.0, 5.0));
  CHECK_THROWS_AS(SigmaRegion(0.5, 0.7, 0.1), Error);
}

TEST_CASE("sup_error_sigma basics") {
  // Physical-mode constant-data run: error at discretization floor.
  const GasParams g(5.0 / 3.0, 1.0);
  const Grid1D grid(4.0, 128);
  const State s(1, 0, 1);
  SolverConfig cfg;
  cfg.mode = Mode::physical;
  cfg.epsilon = 0.1;
  cfg.kappa = 0.1;
  cfg.tau_end = 1.0;
  cfg.snapshot_times = {1.0};
  const auto res = solver::integrate(grid, g, cfg, s, s);
  const riemann::RiemannPattern pat = riemann::solve_pattern(g, s, s);

  const double err = harness::sup_error_sigma(res.snapshots, grid, pat, SigmaRegion(0.5, 0.25, 0.1));
  CHECK(err < 1e-12);

  // h beyond the domain extent: nothing qualifies.
  CHECK_THROWS_AS(
      harness::sup_error_sigma(res.snapshots, grid, pat, SigmaRegion(50.0, 0.25, 0.1)),
      EmptyRegionError);
}

TEST_CASE("sup_error_sigma monotone under region growth (alpha)") {
  const GasParams g(5.0 / 3.0, 1.0);
  const testutil::PatternData data =
      testutil::make_pattern_data(g, State(1, 0, 1), 0.92, 1.06, 0.93);
  const riemann::RiemannPattern pat = riemann::solve_pattern(g, data.left, data.right);
  const Grid1D grid(4.0, 1024);
  SolverConfig cfg;
  cfg.mode = Mode::physical;
  cfg.epsilon = 0.1;
  cfg.kappa = 0.1;
  cfg.tau_end = 1.0;
  cfg.snapshot_times = {0.6, 1.0};
  const auto res = solver::integrate(grid, g, cfg, data.left, data.right);
  REQUIRE(res.report.ok());

  // alpha = 0.4 region is a superset of alpha = 0 near x = 0 (eps < 1).
  const double e_light = harness::sup_error_sigma(res.snapshots, grid, pat,
                                                  SigmaRegion(0.5, 0.0, 0.1));
  const double e_heavy = harness::sup_error_sigma(res.snapshots, grid, pat,
                                                  SigmaRegion(0.5, 0.4, 0.1));
  CHECK(e_heavy >= e_light);

  // h increase shrinks the region.
  const double e_h1 = harness::sup_error_sigma(res.snapshots, grid, pat,
                                               SigmaRegion(0.5, 0.25, 0.1));
  const double e_h2 = harness::sup_error_sigma(res.snapshots, grid, pat,
                                               SigmaRegion(0.8, 0.25, 0.1));
  CHECK(e_h2 <= e_h1);
}

TEST_CASE("asymptotic gap decreases for small-strength data") {
  SmallRun run(60.0, {10.0, 30.0, 60.0});
  REQUIRE(run.res.report.ok());
  const harness::DecaySeries s =
      harness::asymptotic_gap(run.res.snapshots, run.grid, run.set);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[2] < s.values[0]);
}

TEST_CASE("jump series: pure contact data decays exponentially") {
  const GasParams g(5.0 / 3.0, 1.0);
  const State l(1.0, 0.0, 1.0), r(1.2, 0.0, 1.2);  // CD(l) member
  const Grid1D grid(100.0, 4096);
  SolverConfig cfg;
  cfg.nu = 1.0;
  cfg.tau_end = 16.0;
  // Dense early snapshots: the genuine jump dominates the cell-difference
  // proxy only before the smooth contact gradient (~dy/sqrt(1+tau)) takes
  // over, and the fit window ends at half the last snapshot time.
  cfg.snapshot_times.push_back(0.5);
  for (double t = 4.75; t <= 8.01; t += 0.25) cfg.snapshot_times.push_back(t);
  cfg.snapshot_times.push_back(16.0);
  const auto res = solver::integrate(grid, g, cfg, l, r);
  REQUIRE(res.report.ok());

  const harness::DecaySeries s = harness::jump_series(res.snapshots, grid);
  CHECK(s.fitted_rate < 0.0);
  CHECK(s.fit_quality > 0.9);

  // u_x and theta_x jump analogues are computable and decay as well.
  const harness::DecaySeries su =
      harness::jump_series(res.snapshots, grid, harness::JumpKind::velocity_gradient);
  const harness::DecaySeries sth =
      harness::jump_series(res.snapshots, grid, harness::JumpKind::temperature_gradient);
  CHECK(su.values.front() > su.values.back());
  CHECK(sth.values.front() > sth.values.back());

  // The parabolic fields smooth out quickly while the volume keeps a
  // genuine decaying jump: at tau = 0.5 the interface theta difference is
  // a few percent of its initial size, v still a large part.
  const int ir = grid.interface_node(), il = ir - 1;
  const solver::Field& first = res.snapshots.front();
  REQUIRE(first.tau < 1.0);
  const double th_frac = std::abs(first.theta[ir] - first.theta[il]) / std::abs(r.theta - l.theta);
  const double v_frac = std::abs(first.v[ir] - first.v[il]) / std::abs(r.v - l.v);
  CHECK(th_frac < 0.1);
  CHECK(v_frac > 0.2);
  CHECK(v_frac > 3.0 * th_frac);
}

TEST_CASE("asymptotic gap sits at the discretization floor for zero-strength data") {
  const GasParams g(5.0 / 3.0, 1.0);
  const State s(1.1, 0.2, 0.9);
  const Grid1D grid(30.0, 256);
  SolverConfig cfg;
  cfg.tau_end = 3.0;
  cfg.snapshot_times = {1.0, 3.0};
  const auto res = solver::integrate(grid, g, cfg, s, s);
  const riemann::RiemannPattern pat = riemann::solve_pattern(g, s, s);
  const profiles::WaveProfileSet set = profiles::build_wave_profile_set(g, 1.0, pat);
  const harness::DecaySeries gap = harness::asymptotic_gap(res.snapshots, grid, set);
  for (double v : gap.values) CHECK(v < 1e-12);
}

TEST_CASE("jump series: zero-strength data floors out") {
  const GasParams g(5.0 / 3.0, 1.0);
  const State s(1, 0, 1);
  const Grid1D grid(30.0, 256);
  SolverConfig cfg;
  cfg.tau_end = 2.0;
  cfg.snapshot_times = {1.0, 2.0};
  const auto res = solver::integrate(grid, g, cfg, s, s);
  const harness::DecaySeries js = harness::jump_series(res.snapshots, grid);
  CHECK(js.floored);
  CHECK(js.values.empty());
}

TEST_CASE("perturbation norms") {
  SmallRun run(20.0, {20.0}, 1024, 80.0);
  REQUIRE(run.res.report.ok());
  const Field& f = run.res.snapshots.back();

  SUBCASE("zero when the field equals the profile") {
    Field prof = f;
    for (int i = 0; i < run.grid.n_cells; ++i) {
      const profiles::WavePartials w =
          profiles::superposition_eval(run.set, f.tau, run.grid.cell_center(i));
      prof.v[i] = w.V;
      prof.theta[i] = w.Th;
    }
    for (int j = 0; j <= run.grid.n_cells; ++j)
      prof.u[j] = profiles::superposition_eval(run.set, f.tau, run.grid.node_pos(j)).U;
    const harness::PerturbationNorms n = harness::perturbation_norms(prof, run.grid, run.set);
    CHECK(n.l2 == 0.0);
    CHECK(n.l2_deriv == 0.0);
    CHECK(n.linf == 0.0);
  }

  SUBCASE("discrete Sobolev inequality linf^2 <= 2 l2 l2_deriv") {
    const harness::PerturbationNorms n = harness::perturbation_norms(f, run.grid, run.set);
    CHECK(n.l2 > 0.0);
    CHECK(n.linf * n.linf <= 2.0 * n.l2 * n.l2_deriv * (1.0 + 1e-9));
  }
}

TEST_CASE("limit sweep: determinism and flagged rows") {
  const GasParams g(5.0 / 3.0, 1.0);
  const testutil::PatternData data =
      testutil::make_pattern_data(g, State(1, 0, 1), 0.94, 1.04, 0.95);
  harness::LimitSweepConfig cfg{g, data.left, data.right};
  cfg.t_end = 0.8;
  cfg.snapshot_times = {0.6, 0.8};
  cfg.half_width = 4.0;
  cfg.dy_scaled = 0.1;
  cfg.h = 0.5;
  cfg.alpha = 0.25;

  const auto rows = harness::limit_sweep(cfg, {0.1, 0.1});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == "ok");
  // Identical epsilon rows are bit-identical.
  CHECK(rows[0].sup_error == rows[1].sup_error);
  CHECK(rows[0].steps == rows[1].steps);

  // A row whose run cannot be set up is flagged; the sweep continues.
  const auto mixed = harness::limit_sweep(cfg, {0.9, 0.1});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].status != "ok");
  CHECK(std::isnan(mixed[0].sup_error));
  CHECK(mixed[1].status == "ok");

  CHECK_THROWS_AS(harness::limit_sweep(cfg, {}), ConfigError);
  CHECK_THROWS_AS(harness::limit_sweep(cfg, {-0.1}), ConfigError);
}
