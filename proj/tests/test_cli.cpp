#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "visclimit/cli.hpp"
#include "visclimit/io.hpp"

using namespace visclimit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("visclimit_test_XXXXXX" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("config parsing with overrides and precise errors") {
  cli::RunSpec spec = cli::parse_runspec_text(
      "# comment\n"
      "gamma = 1.4\n"
      "left.v = 0.9   # inline comment\n"
      "snapshot_times = 1, 2, 5\n",
      "test.ini", {"right.u=0.25", "n_cells=128"});
  CHECK(spec.gamma == 1.4);
  CHECK(spec.left_v == 0.9);
  CHECK(spec.right_u == 0.25);
  CHECK(spec.n_cells == 128);
  REQUIRE(spec.snapshot_times.size() == 3);
  CHECK(spec.snapshot_times[2] == 5.0);

  // Unknown key names the file and line.
  try {
    cli::parse_runspec_text("gamma = 1.4\nbogus = 7\n", "test.ini", {});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("test.ini:2") != std::string::npos);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  // Bad value names the key.
  try {
    cli::parse_runspec_text("cfl = fast\n", "test.ini", {});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cfl") != std::string::npos);
  }

  // Invariants enforced at parse time.
  CHECK_THROWS_AS(cli::parse_runspec_text("gamma = 0.9\n", "t", {}), ConfigError);
  CHECK_THROWS_AS(cli::parse_runspec_text("n_cells = 127\n", "t", {}), ConfigError);
  CHECK_THROWS_AS(cli::parse_runspec_text("alpha = 0.5\n", "t", {}), ConfigError);
  CHECK_THROWS_AS(cli::parse_runspec_text("left.v = -1\n", "t", {}), ConfigError);
}

TEST_CASE("snapshot CSV round-trips at 17 significant digits") {
  TempDir tmp;
  const solver::Grid1D grid(1.0, 8);
  solver::Field f;
  f.tau = 1.0 / 3.0;
  for (int i = 0; i < 8; ++i) {
    f.v.push_back(1.0 + 1e-17 + i * 0.1);
    f.theta.push_back(std::sqrt(2.0) + i);
  }
  for (int j = 0; j <= 8; ++j) f.u.push_back(std::atan(1.0) * j - 0.7);

  const std::string path = tmp.file("snap.csv");
  cli::write_snapshot_csv(path, grid, f);
  const cli::CsvTable table = cli::read_csv(path);
  REQUIRE(table.header.size() == 5);
  REQUIRE(table.rows.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(table.rows[i][0] == f.tau);
    CHECK(table.rows[i][1] == grid.cell_center(i));
    CHECK(table.rows[i][2] == f.v[i]);
    CHECK(table.rows[i][3] == 0.5 * (f.u[i] + f.u[i + 1]));
    CHECK(table.rows[i][4] == f.theta[i]);
  }
}

TEST_CASE("decay series CSV has the rate footer") {
  TempDir tmp;
  harness::DecaySeries s;
  s.times = {1, 2, 4};
  s.values = {0.5, 0.25, 0.125};
  s.fitted_rate = -0.75;
  s.fit_quality = 0.998;
  const std::string path = tmp.file("series.csv");
  cli::write_series_csv(path, s);
  const cli::CsvTable table = cli::read_csv(path);
  CHECK(table.rows.size() == 3);
  REQUIRE(table.footer.size() == 1);
  CHECK(table.footer[0].find("rate=-0.75") != std::string::npos);
  CHECK(table.footer[0].find("r2=0.998") != std::string::npos);
}

TEST_CASE("cli riemann subcommand and exit codes") {
  TempDir tmp;

  SUBCASE("in-class data prints the pattern and dumps a grid") {
    write_file(tmp.file("run.ini"),
               "gamma = 1.6666666666666667\n"
               "left.v = 1\nleft.u = 0\nleft.theta = 1\n"
               "right.v = 1.2\nright.u = 0.3\nright.theta = 0.9\n"
               "dump_t = 1.0\ndump_nx = 11\n");
    const int code = cli::run({"riemann", "--config", tmp.file("run.ini"), "--out",
                               tmp.file("out")});
    CHECK(code == cli::kExitOk);
    CHECK(fs::exists(tmp.file("out") + "/exact.csv"));
  }

  SUBCASE("non-R1-CD-R3 data exits 2 naming the inequality") {
    const int code = cli::run({"riemann", "--override", "left.u=0.5", "--override",
                               "right.u=-0.5"});
    CHECK(code == cli::kExitConfig);
  }

  SUBCASE("unknown key exits 2") {
    const int code = cli::run({"riemann", "--override", "nope=1"});
    CHECK(code == cli::kExitConfig);
  }
}

TEST_CASE("cli solve writes snapshots and a report") {
  TempDir tmp;
  const int code = cli::run({"solve",
                             "--out", tmp.file("out"),
                             "--override", "tau_end=0.5",
                             "--override", "snapshot_times=0.25,0.5",
                             "--override", "n_cells=64",
                             "--override", "L=12",
                             "--override", "right.v=1.02",
                             "--override", "right.u=0.01",
                             "--override", "right.theta=1.01"});
  CHECK(code == cli::kExitOk);
  CHECK(fs::exists(tmp.file("out") + "/report.txt"));
  int snapshots = 0;
  for (const auto& entry : fs::directory_iterator(tmp.file("out")))
    if (entry.path().filename().string().rfind("snapshot_", 0) == 0) ++snapshots;
  CHECK(snapshots == 2);
}

TEST_CASE("cli profile writes the profile table") {
  TempDir tmp;
  const int code = cli::run({"profile",
                             "--out", tmp.file("out"),
                             "--override", "right.v=1.1",
                             "--override", "right.u=0.2",
                             "--override", "right.theta=0.95",
                             "--override", "tau_list=1,2",
                             "--override", "n_cells=32",
                             "--override", "bvp_points=801"});
  CHECK(code == cli::kExitOk);
  const cli::CsvTable table = cli::read_csv(tmp.file("out") + "/profile.csv");
  CHECK(table.header.size() == 11);
  CHECK(table.rows.size() == 64);  // two taus x 32 cells
}

TEST_CASE("cli limit: empty epsilon list exits 2, sweep writes rows") {
  TempDir tmp;
  CHECK(cli::run({"limit", "--override", "epsilons="}) == cli::kExitConfig);

  const int code = cli::run({"limit",
                             "--out", tmp.file("out"),
                             "--override", "epsilons=0.1",
                             "--override", "tau_end=0.7",
                             "--override", "snapshot_times=0.6",
                             "--override", "L=4.0",
                             "--override", "dy_scaled=0.1",
                             "--override", "right.v=1.05",
                             "--override", "right.u=0.1",
                             "--override", "right.theta=0.98"});
  CHECK(code == cli::kExitOk);
  const cli::CsvTable table = cli::read_csv(tmp.file("out") + "/sweep.csv");
  CHECK(table.header.size() == 10);
  // The trailing status column is text, so data lines land in footer.
  CHECK(table.rows.size() + table.footer.size() == 1);

  // Duplicate epsilons are dropped with a warning: still one row.
  const int dup = cli::run({"limit",
                            "--out", tmp.file("out2"),
                            "--override", "epsilons=0.1,0.1",
                            "--override", "tau_end=0.7",
                            "--override", "snapshot_times=0.6",
                            "--override", "L=4.0",
                            "--override", "dy_scaled=0.1",
                            "--override", "right.v=1.05",
                            "--override", "right.u=0.1",
                            "--override", "right.theta=0.98"});
  CHECK(dup == cli::kExitOk);
  const cli::CsvTable t2 = cli::read_csv(tmp.file("out2") + "/sweep.csv");
  CHECK(t2.rows.size() + t2.footer.size() == 1);
}
