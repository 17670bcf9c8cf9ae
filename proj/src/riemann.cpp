#include "visclimit/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "visclimit/numerics.hpp"

namespace visclimit::riemann {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr double kRootTol = 1e-10;    // residual |u_* - u^*|
constexpr double kFanTol = 1e-11;     // fan inversion tolerance in x/t
constexpr double kCollapse = 1e-13;   // zero-strength wave snap threshold

// State and du/dp_m along the wave curve of `family` anchored at `anchor`,
// parameterized by the pressure p behind the wave.
struct CurvePoint {
  double v, u, dudp;
};

CurvePoint curve_point(const gas::GasParams& g, const gas::State& anchor, int family, double p) {
  const double p_a = gas::pressure(g, anchor);
  CurvePoint c;
  c.v = anchor.v * std::pow(p_a / p, 1.0 / g.gamma);
  c.u = anchor.u + velocity_change_along_curve(g, anchor, c.v, family);
  const double s = std::sqrt(c.v / (g.gamma * p));
  c.dudp = family == 1 ? -s : s;
  return c;
}

}  // namespace

double velocity_change_along_curve(const gas::GasParams& g, const gas::State& ref, double v,
                                   int family) {
  if (family != 1 && family != 3)
    throw Error("velocity_change_along_curve: family must be 1 or 3");
  if (!(v > 0.0)) throw Error("velocity_change_along_curve: require v > 0");
  if (v == ref.v) return 0.0;
  const double val = num::adaptive_simpson(
      [&](double eta) { return gas::lambda_on_isentrope(g, ref, eta, family); }, ref.v, v,
      kQuadTol);
  return -val;
}

RiemannPattern solve_pattern(const gas::GasParams& g, const gas::State& left,
                             const gas::State& right) {
  const double p_l = gas::pressure(g, left);
  const double p_r = gas::pressure(g, right);
  const double p_min = std::min(p_l, p_r);

  // f(p) = u_*(p) - u^*(p) is strictly decreasing in p.
  auto f_of = [&](double p) {
    return curve_point(g, left, 1, p).u - curve_point(g, right, 3, p).u;
  };
  auto fdf = [&](double p) {
    const CurvePoint cl = curve_point(g, left, 1, p);
    const CurvePoint cr = curve_point(g, right, 3, p);
    return num::FdF{-(cl.u - cr.u), -(cl.dudp - cr.dudp)};  // negated: increasing in p
  };

  // Vacuum check from the closed-form limit p -> 0+: the velocity gain
  // along either curve saturates at (2/(gamma-1)) sqrt(gamma R theta).
  const double gain = 2.0 / (g.gamma - 1.0);
  const double f_zero = left.u + gain * std::sqrt(g.gamma * g.R * left.theta) -
                        (right.u - gain * std::sqrt(g.gamma * g.R * right.theta));
  if (f_zero <= kRootTol)
    throw NoBracketError(
        "solve_pattern: cannot bracket contact pressure in (0, min(p_-, p_+)] "
        "(data opens a vacuum)");

  double p_m;
  const double f_min = f_of(p_min);
  if (std::abs(f_min) <= kRootTol) {
    p_m = p_min;
  } else if (f_min > 0.0) {
    // Root lies above min(p_-, p_+): at least one wave would be a
    // compression. Locate it on the extended curves to name the violated
    // admissibility inequality.
    double hi = p_min;
    double f_hi = f_min;
    for (int k = 0; k < 20 && f_hi > 0.0; ++k) {
      hi *= 2.0;
      f_hi = f_of(hi);
    }
    std::string violated;
    if (f_hi <= 0.0) {
      const double root = num::newton_bisect(fdf, p_min, hi, std::sqrt(p_min * hi), kRootTol);
      if (root > p_l) violated = "u_- < u_*";
      if (root > p_r) violated += violated.empty() ? "u^* < u_+" : " and u^* < u_+";
    } else {
      violated = "u_- < u_* and u^* < u_+";
    }
    throw PatternClassError(
        "solve_pattern: data not in the R1-CD-R3 class; violated: " + violated, violated);
  } else {
    // f(p_min) < 0: bracket downward; f increases as p decreases and the
    // vacuum case was excluded above.
    double lo = p_min;
    double f_lo = f_min;
    for (int k = 0; k < 60 && f_lo < 0.0; ++k) {
      lo *= 0.5;
      f_lo = f_of(lo);
    }
    if (f_lo < 0.0)
      throw NoBracketError("solve_pattern: cannot bracket contact pressure in (0, min(p_-, p_+)]");
    // Acoustic two-impedance seed.
    const double zl = gas::lambda(g, left, 3), zr = gas::lambda(g, right, 3);
    double seed = (zr * p_l + zl * p_r - zl * zr * (right.u - left.u)) / (zl + zr);
    seed = std::clamp(seed, lo * 1.000001, p_min * 0.999999);
    p_m = num::newton_bisect(fdf, lo, p_min, seed, kRootTol);
  }

  // Snap zero-strength waves to exact constants.
  auto make_side = [&](const gas::State& anchor, int family) {
    if (std::abs(p_m - gas::pressure(g, anchor)) <= kCollapse * gas::pressure(g, anchor))
      return anchor;
    const CurvePoint c = curve_point(g, anchor, family, p_m);
    return gas::State(c.v, c.u, gas::theta_on_isentrope(g, anchor, c.v));
  };
  const gas::State star = make_side(left, 1);
  const gas::State star_upper = make_side(right, 3);

  RiemannPattern pat{g,
                     left,
                     right,
                     star,
                     star_upper,
                     Fan{gas::lambda(g, left, 1), gas::lambda(g, star, 1)},
                     Fan{gas::lambda(g, star_upper, 3), gas::lambda(g, right, 3)},
                     p_m,
                     std::abs(star.u - star_upper.u)};
  if (std::abs(star.v - left.v) <= kCollapse * left.v) pat.fan1.tail = pat.fan1.head;
  if (std::abs(star_upper.v - right.v) <= kCollapse * right.v) pat.fan3.head = pat.fan3.tail;
  return pat;
}

namespace {

// Invert lambda_family(v, s_anchor) = xi inside a fan. Seeded with the
// closed form of the power law, then polished by safeguarded Newton.
double invert_fan(const gas::GasParams& g, const gas::State& anchor, int family, double v_lo,
                  double v_hi, double xi) {
  const double q = 0.5 * (g.gamma + 1.0);
  const double c =
      std::sqrt(g.gamma * g.R * anchor.theta) * std::pow(anchor.v, 0.5 * (g.gamma - 1.0));
  const double seed = std::pow(c / std::abs(xi), 1.0 / q);
  // family 1: lambda increasing in v; family 3: decreasing. Arrange an
  // increasing objective for the safeguarded Newton.
  auto fdf = [&](double v) {
    const double lam = gas::lambda_on_isentrope(g, anchor, v, family);
    const double dlam = -q * lam / v;
    if (family == 1) return num::FdF{lam - xi, dlam};
    return num::FdF{xi - lam, -dlam};
  };
  const double lo = v_lo * (1.0 - 1e-12), hi = v_hi * (1.0 + 1e-12);
  return num::newton_bisect(fdf, lo, hi, seed, kFanTol);
}

}  // namespace

gas::State eval_exact(const RiemannPattern& pat, double t, double x) {
  if (!(t > 0.0)) throw Error("eval_exact: require t > 0");
  const double xi = x / t;
  const gas::GasParams& g = pat.g;

  if (xi <= pat.fan1.head) return pat.left;
  if (xi < pat.fan1.tail) {
    const double v = invert_fan(g, pat.left, 1, pat.left.v, pat.star.v, xi);
    return gas::State(v, pat.left.u + velocity_change_along_curve(g, pat.left, v, 1),
                      gas::theta_on_isentrope(g, pat.left, v));
  }
  if (xi < 0.0) return pat.star;
  if (xi <= pat.fan3.head) return pat.star_upper;
  if (xi < pat.fan3.tail) {
    const double v = invert_fan(g, pat.right, 3, pat.right.v, pat.star_upper.v, xi);
    return gas::State(v, pat.right.u + velocity_change_along_curve(g, pat.right, v, 3),
                      gas::theta_on_isentrope(g, pat.right, v));
  }
  return pat.right;
}

}  // namespace visclimit::riemann
