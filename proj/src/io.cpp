#include "visclimit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace visclimit::cli {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  return out;
}

}  // namespace

void write_snapshot_csv(const std::string& path, const solver::Grid1D& grid,
                        const solver::Field& f) {
  std::ofstream out = open_out(path);
  out << "tau,y,v,u,theta\n";
  for (int i = 0; i < grid.n_cells; ++i) {
    const double u_mid = 0.5 * (f.u[i] + f.u[i + 1]);
    out << fmt17(f.tau) << ',' << fmt17(grid.cell_center(i)) << ',' << fmt17(f.v[i]) << ','
        << fmt17(u_mid) << ',' << fmt17(f.theta[i]) << '\n';
  }
}

void write_series_csv(const std::string& path, const harness::DecaySeries& s) {
  std::ofstream out = open_out(path);
  out << "tau,value\n";
  for (size_t i = 0; i < s.times.size(); ++i)
    out << fmt17(s.times[i]) << ',' << fmt17(s.values[i]) << '\n';
  out << "rate=" << fmt17(s.fitted_rate) << ",r2=" << fmt17(s.fit_quality) << '\n';
}

void write_sweep_csv(const std::string& path, const std::vector<harness::SweepRow>& rows) {
  std::ofstream out = open_out(path);
  out << "epsilon,kappa,nu,h,alpha,sup_error,n_cells,steps,drift,status\n";
  for (const auto& r : rows) {
    out << fmt17(r.epsilon) << ',' << fmt17(r.kappa) << ',' << fmt17(r.nu) << ',' << fmt17(r.h)
        << ',' << fmt17(r.alpha) << ',' << fmt17(r.sup_error) << ',' << r.n_cells << ','
        << r.steps << ',' << fmt17(r.drift) << ',' << r.status << '\n';
  }
}

void write_profile_csv(const std::string& path, const profiles::WaveProfileSet& set,
                       const std::vector<double>& taus, const std::vector<double>& ys) {
  std::ofstream out = open_out(path);
  out << "tau,y,V,U,Theta,Vy,Uy,Thetay,Q1,Q2,Qcd\n";
  for (double tau : taus) {
    for (double y : ys) {
      const profiles::WavePartials w = profiles::superposition_eval(set, tau, y);
      const profiles::ProfileResiduals r = profiles::residuals(set, tau, y);
      out << fmt17(tau) << ',' << fmt17(y) << ',' << fmt17(w.V) << ',' << fmt17(w.U) << ','
          << fmt17(w.Th) << ',' << fmt17(w.Vy) << ',' << fmt17(w.Uy) << ',' << fmt17(w.Thy)
          << ',' << fmt17(r.q1) << ',' << fmt17(r.q2) << ',' << fmt17(r.q_cd) << '\n';
    }
  }
}

void write_exact_csv(const std::string& path, const riemann::RiemannPattern& pattern, double t,
                     const std::vector<double>& xs) {
  std::ofstream out = open_out(path);
  out << "t,x,v,u,theta\n";
  for (double x : xs) {
    const gas::State s = riemann::eval_exact(pattern, t, x);
    out << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(s.v) << ',' << fmt17(s.u) << ','
        << fmt17(s.theta) << '\n';
  }
}

void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& keys) {
  std::ofstream out = open_out(path);
  for (const auto& [k, v] : keys) out << k << " = " << v << '\n';
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    bool numeric = true;
    for (const std::string& c : cells) {
      try {
        size_t pos = 0;
        row.push_back(std::stod(c, &pos));
        if (pos != c.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (numeric && !cells.empty())
      table.rows.push_back(std::move(row));
    else
      table.footer.push_back(line);
  }
  return table;
}

}  // namespace visclimit::cli
