#pragma once

#include <cmath>

#include "visclimit/errors.hpp"

namespace visclimit::gas {

// Ideal polytropic gas: p = R theta / v, e = R theta / (gamma - 1).
struct GasParams {
  double gamma;
  double R;
  GasParams(double gamma_, double R_) : gamma(gamma_), R(R_) {
    if (!std::isfinite(gamma) || !std::isfinite(R) || gamma <= 1.0 || R <= 0.0)
      throw Error("GasParams: require finite gamma > 1 and R > 0");
  }
};

// Point (v, u, theta) in phase space; v and theta strictly positive.
struct State {
  double v;
  double u;
  double theta;
  State(double v_, double u_, double theta_) : v(v_), u(u_), theta(theta_) {
    if (!std::isfinite(v) || !std::isfinite(u) || !std::isfinite(theta) || v <= 0.0 ||
        theta <= 0.0)
      throw Error("State: require finite v > 0, theta > 0");
  }
};

inline double pressure(const GasParams& g, const State& s) { return g.R * s.theta / s.v; }

inline double internal_energy(const GasParams& g, const State& s) {
  return g.R * s.theta / (g.gamma - 1.0);
}

// s(v, theta) = R/(gamma-1) ln theta + R ln v, additive constant zero, so
// that theta v^{gamma-1} = const holds exactly along isentropes.
inline double entropy(const GasParams& g, const State& s) {
  return g.R / (g.gamma - 1.0) * std::log(s.theta) + g.R * std::log(s.v);
}

// Characteristic speeds of the Lagrangian Euler system:
// lambda_1 = -sqrt(gamma p / v), lambda_2 = 0, lambda_3 = +sqrt(gamma p / v).
inline double lambda(const GasParams& g, const State& s, int family) {
  switch (family) {
    case 2:
      return 0.0;
    case 1:
    case 3: {
      const double mag = std::sqrt(g.gamma * g.R * s.theta) / s.v;
      return family == 1 ? -mag : mag;
    }
    default:
      throw Error("lambda: family must be 1, 2 or 3");
  }
}

// Temperature at volume v on the isentrope through ref.
inline double theta_on_isentrope(const GasParams& g, const State& ref, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) throw Error("theta_on_isentrope: require v > 0");
  return ref.theta * std::pow(ref.v / v, g.gamma - 1.0);
}

// lambda_family(v, s_ref): characteristic speed at volume v on the
// isentrope through ref. Equals +-C v^{-(gamma+1)/2} with C fixed by ref.
inline double lambda_on_isentrope(const GasParams& g, const State& ref, double v, int family) {
  if (family == 2) return 0.0;
  if (family != 1 && family != 3) throw Error("lambda_on_isentrope: family must be 1 or 3");
  const double c = std::sqrt(g.gamma * g.R * ref.theta) * std::pow(ref.v, 0.5 * (g.gamma - 1.0));
  const double mag = c * std::pow(v, -0.5 * (g.gamma + 1.0));
  return family == 1 ? -mag : mag;
}

// delta = |(v_+ - v_-, u_+ - u_-, theta_+ - theta_-)|.
inline double wave_strength(const State& left, const State& right) {
  return std::hypot(right.v - left.v, right.u - left.u, right.theta - left.theta);
}

}  // namespace visclimit::gas
