#include "visclimit/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace visclimit::cli {

gas::GasParams RunSpec::gas_params() const { return gas::GasParams(gamma, R); }
gas::State RunSpec::left_state() const { return gas::State(left_v, left_u, left_theta); }
gas::State RunSpec::right_state() const { return gas::State(right_v, right_u, right_theta); }

solver::SolverConfig RunSpec::solver_config() const {
  solver::SolverConfig sc;
  if (mode == "scaled")
    sc.mode = solver::Mode::scaled;
  else if (mode == "physical")
    sc.mode = solver::Mode::physical;
  else
    throw ConfigError("mode must be 'scaled' or 'physical', got '" + mode + "'");
  sc.nu = nu;
  sc.epsilon = epsilon;
  sc.kappa = kappa;
  sc.cfl = cfl;
  sc.smoothing_cells = smoothing_cells;
  sc.tau_end = tau_end;
  sc.snapshot_times = snapshot_times;
  sc.nu_min = nu_min;
  sc.nu_max = nu_max;
  return sc;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Setter {
  std::function<void(RunSpec&, const std::string&, const std::string&)> apply;
};

double parse_double(const std::string& v, const std::string& where) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw ConfigError(where + ": not a number: '" + v + "'");
  }
}

int parse_int(const std::string& v, const std::string& where) {
  try {
    size_t pos = 0;
    const int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return i;
  } catch (const std::exception&) {
    throw ConfigError(where + ": not an integer: '" + v + "'");
  }
}

bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(where + ": not a boolean: '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(item, where));
  }
  return out;
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto dbl = [&t](const std::string& key, double RunSpec::*member) {
      t[key] = {[member](RunSpec& s, const std::string& v, const std::string& w) {
        s.*member = parse_double(v, w);
      }};
    };
    auto integer = [&t](const std::string& key, int RunSpec::*member) {
      t[key] = {[member](RunSpec& s, const std::string& v, const std::string& w) {
        s.*member = parse_int(v, w);
      }};
    };
    auto list = [&t](const std::string& key, std::vector<double> RunSpec::*member) {
      t[key] = {[member](RunSpec& s, const std::string& v, const std::string& w) {
        s.*member = parse_list(v, w);
      }};
    };
    auto str = [&t](const std::string& key, std::string RunSpec::*member) {
      t[key] = {[member](RunSpec& s, const std::string& v, const std::string&) {
        s.*member = v;
      }};
    };
    dbl("gamma", &RunSpec::gamma);
    dbl("R", &RunSpec::R);
    dbl("left.v", &RunSpec::left_v);
    dbl("left.u", &RunSpec::left_u);
    dbl("left.theta", &RunSpec::left_theta);
    dbl("right.v", &RunSpec::right_v);
    dbl("right.u", &RunSpec::right_u);
    dbl("right.theta", &RunSpec::right_theta);
    str("mode", &RunSpec::mode);
    dbl("nu", &RunSpec::nu);
    dbl("epsilon", &RunSpec::epsilon);
    dbl("kappa", &RunSpec::kappa);
    dbl("cfl", &RunSpec::cfl);
    integer("smoothing_cells", &RunSpec::smoothing_cells);
    dbl("tau_end", &RunSpec::tau_end);
    list("snapshot_times", &RunSpec::snapshot_times);
    dbl("L", &RunSpec::L);
    integer("n_cells", &RunSpec::n_cells);
    dbl("nu_min", &RunSpec::nu_min);
    dbl("nu_max", &RunSpec::nu_max);
    dbl("h", &RunSpec::h);
    dbl("alpha", &RunSpec::alpha);
    t["sigma_symmetric"] = {[](RunSpec& s, const std::string& v, const std::string& w) {
      s.sigma_symmetric = parse_bool(v, w);
    }};
    list("tau_list", &RunSpec::tau_list);
    integer("bvp_points", &RunSpec::bvp_points);
    dbl("bvp_xi", &RunSpec::bvp_xi);
    dbl("dump_t", &RunSpec::dump_t);
    integer("dump_nx", &RunSpec::dump_nx);
    dbl("dump_xmax", &RunSpec::dump_xmax);
    list("epsilons", &RunSpec::epsilons);
    dbl("dy_scaled", &RunSpec::dy_scaled);
    str("kernels", &RunSpec::kernels);
    return t;
  }();
  return table;
}

void apply_pair(RunSpec& spec, const std::string& key, const std::string& value,
                const std::string& where) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError(where + ": unknown key '" + key + "'");
  it->second.apply(spec, value, where + ": key '" + key + "'");
}

void validate(const RunSpec& spec) {
  auto check = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("config: " + msg);
  };
  check(std::isfinite(spec.gamma) && spec.gamma > 1.0, "gamma must be > 1");
  check(std::isfinite(spec.R) && spec.R > 0.0, "R must be > 0");
  check(spec.left_v > 0.0 && spec.left_theta > 0.0, "left state needs v > 0, theta > 0");
  check(spec.right_v > 0.0 && spec.right_theta > 0.0, "right state needs v > 0, theta > 0");
  check(spec.mode == "scaled" || spec.mode == "physical", "mode must be scaled or physical");
  check(spec.cfl > 0.0 && spec.cfl < 1.0, "cfl must be in (0, 1)");
  check(spec.smoothing_cells >= 0, "smoothing_cells must be >= 0");
  check(spec.tau_end > 0.0, "tau_end must be > 0");
  check(spec.L > 0.0, "L must be > 0");
  check(spec.n_cells >= 8 && spec.n_cells % 2 == 0, "n_cells must be even and >= 8");
  check(spec.h > 0.0, "h must be > 0");
  check(spec.alpha >= 0.0 && spec.alpha < 0.5, "alpha must be in [0, 1/2)");
  check(spec.bvp_points >= 9, "bvp_points must be >= 9");
  check(spec.dy_scaled > 0.0, "dy_scaled must be > 0");
}

}  // namespace

RunSpec parse_runspec_text(const std::string& text, const std::string& origin,
                           const std::vector<std::string>& overrides) {
  RunSpec spec;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    apply_pair(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), where);
  }
  for (const std::string& ov : overrides) {
    const size_t eq = ov.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--override '" + ov + "': expected key=value");
    apply_pair(spec, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)), "--override '" + ov + "'");
  }
  validate(spec);
  return spec;
}

RunSpec parse_runspec(const std::string& path, const std::vector<std::string>& overrides) {
  if (path.empty()) return parse_runspec_text("", "<defaults>", overrides);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_runspec_text(buf.str(), path, overrides);
}

}  // namespace visclimit::cli
