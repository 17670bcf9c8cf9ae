#pragma once

#include <string>
#include <utility>
#include <vector>

#include "visclimit/harness.hpp"

namespace visclimit::cli {

// Every float is written with 17 significant digits so CSV output
// round-trips exactly.
std::string fmt17(double x);

// Columns tau, y, v, u, theta; one row per cell, u averaged from the two
// flanking nodes (v and theta are the cell values verbatim).
void write_snapshot_csv(const std::string& path, const solver::Grid1D& grid,
                        const solver::Field& f);

// Columns tau, value plus a footer row "rate=<fitted>,r2=<quality>".
void write_series_csv(const std::string& path, const harness::DecaySeries& s);

void write_sweep_csv(const std::string& path, const std::vector<harness::SweepRow>& rows);

// Columns tau, y, V, U, Theta, Vy, Uy, Thetay, Q1, Q2, Qcd.
void write_profile_csv(const std::string& path, const profiles::WaveProfileSet& set,
                       const std::vector<double>& taus, const std::vector<double>& ys);

// Columns t, x, v, u, theta of the exact Euler solution.
void write_exact_csv(const std::string& path, const riemann::RiemannPattern& pattern, double t,
                     const std::vector<double>& xs);

void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& keys);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> footer;  // non-numeric trailing lines
};
CsvTable read_csv(const std::string& path);

}  // namespace visclimit::cli
