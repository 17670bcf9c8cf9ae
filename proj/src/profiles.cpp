#include "visclimit/profiles.hpp"

#include <cmath>
#include <string>

#include "visclimit/numerics.hpp"

namespace visclimit::profiles {

namespace {
constexpr double kZeroWave = 1e-13;
constexpr double kInvertTol = 1e-11;
}  // namespace

WaveProfileSet build_wave_profile_set(const gas::GasParams& g, double nu,
                                      const riemann::RiemannPattern& pattern,
                                      const SelfSimilarOptions& opts) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw Error("build_wave_profile_set: require nu > 0");
  const double p_m = pattern.p_contact;
  const double a = nu * p_m * (g.gamma - 1.0) / (g.R * g.R * g.gamma);
  WaveProfileSet set{g,
                     nu,
                     pattern,
                     solve_self_similar(pattern.star.theta, pattern.star_upper.theta, a, opts),
                     p_m,
                     pattern.star.u,
                     {pattern.fan1.head, pattern.fan1.tail},
                     {pattern.fan3.head, pattern.fan3.tail}};
  return set;
}

WavePartials viscous_contact_eval(const WaveProfileSet& set, double tau, double y) {
  if (!(tau >= 0.0)) throw Error("viscous_contact_eval: require tau >= 0");
  const gas::GasParams& g = set.g;
  const double nu = set.nu, pm = set.p_contact, a = set.contact.a;
  const double r2 = 1.0 / (1.0 + tau);
  const double r = std::sqrt(r2);
  const double xi = y * r;

  const double T = set.contact.value(xi);
  const double Tp = set.contact.deriv(xi);
  // Higher xi-derivatives via the profile ODE -(xi/2)T' = a (T'/T)'.
  const double ia2 = 1.0 / (2.0 * a);
  const double Tpp = Tp * Tp / T - xi * T * Tp * ia2;
  const double Tppp =
      2.0 * Tp * Tpp / T - Tp * Tp * Tp / (T * T) - ia2 * (T * Tp + xi * Tp * Tp + xi * T * Tpp);

  // hatTheta(tau, y) = T(y / sqrt(1+tau)) partials.
  const double Hy = Tp * r;
  const double Hyy = Tpp * r2;
  const double Ht = -0.5 * xi * r2 * Tp;
  const double Hty = -0.5 * r2 * r * (Tp + xi * Tpp);
  const double Htyy = -0.5 * r2 * r2 * (2.0 * Tpp + xi * Tppp);
  const double Htt = 0.25 * r2 * r2 * (3.0 * xi * Tp + xi * xi * Tpp);

  const double b = nu * (g.gamma - 1.0) / (g.R * g.gamma);
  // Coefficient of hatTheta_tau in Theta^CD: (1 - b)/p_+ makes the wave
  // satisfy the momentum equation exactly for every R.
  const double D = (1.0 - b) / pm;

  WavePartials w;
  w.V = g.R * T / pm;
  w.Vy = g.R * Hy / pm;
  w.Vt = g.R * Ht / pm;

  // W = hatTheta_y / hatTheta; W_y reduces through the ODE.
  const double W = Hy / T;
  const double Wy = -r2 * xi * Tp * ia2;
  const double Wyy = -r2 * r * (Tp + xi * Tpp) * ia2;
  const double Wt = r2 * r * Tp * (xi * xi * ia2 * 0.5 - 0.5 / T);
  w.U = set.u_contact + b * W;
  w.Uy = b * Wy;
  w.Uyy = b * Wyy;
  w.Ut = b * Wt;

  w.Th = T + D * Ht;
  w.Thy = Hy + D * Hty;
  w.Thyy = Hyy + D * Htyy;
  w.Tht = Ht + D * Htt;
  return w;
}

namespace {

WavePartials constant_partials(const gas::State& s) {
  WavePartials w;
  w.V = s.v;
  w.U = s.u;
  w.Th = s.theta;
  return w;
}

}  // namespace

WavePartials approx_rarefaction_eval(const WaveProfileSet& set, int family, double tau, double y) {
  if (family != 1 && family != 3)
    throw Error("approx_rarefaction_eval: family must be 1 or 3");
  if (!(tau >= 0.0)) throw Error("approx_rarefaction_eval: require tau >= 0");
  const gas::GasParams& g = set.g;
  const WaveProfileSet::Endpoints ep = family == 1 ? set.burgers1 : set.burgers3;
  const gas::State& anchor = family == 1 ? set.pattern.star : set.pattern.right;
  const double span = ep.w_plus - ep.w_minus;
  if (span < kZeroWave * (1.0 + std::abs(ep.w_minus) + std::abs(ep.w_plus)))
    return constant_partials(anchor);

  const BurgersValue bv = burgers_smooth(ep.w_minus, ep.w_plus, 1.0 + tau, y);
  const double w = bv.w, wy = bv.w_y, wyy = bv.w_yy;
  const double wt = -w * wy;

  // Invert lambda_family(V, s_anchor) = w; closed-form power-law seed.
  const double q = 0.5 * (g.gamma + 1.0);
  const double c =
      std::sqrt(g.gamma * g.R * anchor.theta) * std::pow(anchor.v, 0.5 * (g.gamma - 1.0));
  const double seed = std::pow(c / std::abs(w), 1.0 / q);
  const double v_in = family == 1 ? set.pattern.left.v : set.pattern.star_upper.v;
  const double lo = std::min(anchor.v, v_in) * (1.0 - 1e-12);
  const double hi = std::max(anchor.v, v_in) * (1.0 + 1e-12);
  auto fdf = [&](double v) {
    const double lam = gas::lambda_on_isentrope(g, anchor, v, family);
    const double dlam = -q * lam / v;
    if (family == 1) return num::FdF{lam - w, dlam};
    return num::FdF{w - lam, -dlam};
  };
  const double V = num::newton_bisect(fdf, lo, hi, seed, kInvertTol);

  // Chain rule with lambda(V) identified with w, per the construction.
  const double lam_p = -q * w / V;
  const double lam_pp = q * (q + 1.0) * w / (V * V);
  WavePartials out;
  out.V = V;
  out.Vy = wy / lam_p;
  out.Vt = wt / lam_p;
  const double Vyy = (wyy - lam_pp * out.Vy * out.Vy) / lam_p;

  out.U = anchor.u + riemann::velocity_change_along_curve(g, anchor, V, family);
  out.Uy = -w * out.Vy;
  out.Ut = -w * out.Vt;
  out.Uyy = -(wy * out.Vy + w * Vyy);

  const double gm1 = g.gamma - 1.0;
  out.Th = anchor.theta * std::pow(anchor.v / V, gm1);
  out.Thy = -gm1 * out.Th * out.Vy / V;
  out.Tht = -gm1 * out.Th * out.Vt / V;
  out.Thyy = -gm1 * out.Th * (Vyy / V - g.gamma * (out.Vy / V) * (out.Vy / V));
  return out;
}

WavePartials superposition_eval(const WaveProfileSet& set, double tau, double y) {
  const WavePartials r1 = approx_rarefaction_eval(set, 1, tau, y);
  const WavePartials cd = viscous_contact_eval(set, tau, y);
  const WavePartials r3 = approx_rarefaction_eval(set, 3, tau, y);
  WavePartials s;
  s.V = r1.V + cd.V + r3.V - (set.pattern.star.v + set.pattern.star_upper.v);
  s.U = r1.U + cd.U + r3.U - (set.pattern.star.u + set.pattern.star_upper.u);
  s.Th = r1.Th + cd.Th + r3.Th - (set.pattern.star.theta + set.pattern.star_upper.theta);
  s.Vy = r1.Vy + cd.Vy + r3.Vy;
  s.Uy = r1.Uy + cd.Uy + r3.Uy;
  s.Thy = r1.Thy + cd.Thy + r3.Thy;
  s.Vt = r1.Vt + cd.Vt + r3.Vt;
  s.Ut = r1.Ut + cd.Ut + r3.Ut;
  s.Tht = r1.Tht + cd.Tht + r3.Tht;
  s.Uyy = r1.Uyy + cd.Uyy + r3.Uyy;
  s.Thyy = r1.Thyy + cd.Thyy + r3.Thyy;
  if (!(s.V > 0.0) || !(s.Th > 0.0))
    throw PositivityError("superposition_eval: non-positive V or Theta at (tau=" +
                              std::to_string(tau) + ", y=" + std::to_string(y) +
                              "); wave strength too large for the profile ansatz",
                          tau, y);
  return s;
}

namespace {

// Momentum and energy defects of a profile in the scaled system.
void defects(const gas::GasParams& g, double nu, const WavePartials& w, double* momentum,
             double* energy) {
  const double P = g.R * w.Th / w.V;
  const double Py = g.R * (w.Thy * w.V - w.Th * w.Vy) / (w.V * w.V);
  const double visc = (w.Uyy * w.V - w.Uy * w.Vy) / (w.V * w.V);
  const double heat = nu * (w.Thyy * w.V - w.Thy * w.Vy) / (w.V * w.V);
  *momentum = w.Ut + Py - visc;
  *energy = g.R / (g.gamma - 1.0) * w.Tht + P * w.Uy - heat - w.Uy * w.Uy / w.V;
}

}  // namespace

ProfileResiduals residuals(const WaveProfileSet& set, double tau, double y) {
  const WavePartials s = superposition_eval(set, tau, y);
  ProfileResiduals out;
  out.mass_defect = s.Vt - s.Uy;
  if (std::abs(out.mass_defect) >= 1e-7)
    throw Error("residuals: superposition mass defect above 1e-7");
  defects(set.g, set.nu, s, &out.q1, &out.q2);

  const WavePartials cd = viscous_contact_eval(set, tau, y);
  double mom_cd;
  defects(set.g, set.nu, cd, &mom_cd, &out.q_cd);
  return out;
}

ProfileResiduals residuals_fd(const WaveProfileSet& set, double tau, double y,
                              double step_scale) {
  const double hy = step_scale * (1.0 + std::abs(y));
  const double ht = step_scale * (1.0 + tau);
  auto value = [&](double t, double x) { return superposition_eval(set, t, x); };
  const WavePartials c = value(tau, y);
  const WavePartials yp = value(tau, y + hy), ym = value(tau, y - hy);
  const WavePartials tp = value(tau + ht, y), tm = value(tau - std::min(ht, tau), y);
  const double t_lo = tau - std::min(ht, tau);

  WavePartials w;
  w.V = c.V;
  w.U = c.U;
  w.Th = c.Th;
  w.Vy = (yp.V - ym.V) / (2.0 * hy);
  w.Uy = (yp.U - ym.U) / (2.0 * hy);
  w.Thy = (yp.Th - ym.Th) / (2.0 * hy);
  w.Uyy = (yp.U - 2.0 * c.U + ym.U) / (hy * hy);
  w.Thyy = (yp.Th - 2.0 * c.Th + ym.Th) / (hy * hy);
  w.Vt = (tp.V - tm.V) / (tau + ht - t_lo);
  w.Ut = (tp.U - tm.U) / (tau + ht - t_lo);
  w.Tht = (tp.Th - tm.Th) / (tau + ht - t_lo);

  ProfileResiduals out;
  out.mass_defect = w.Vt - w.Uy;
  defects(set.g, set.nu, w, &out.q1, &out.q2);

  auto cd_value = [&](double t, double x) { return viscous_contact_eval(set, t, x); };
  const WavePartials cc = cd_value(tau, y);
  const WavePartials cyp = cd_value(tau, y + hy), cym = cd_value(tau, y - hy);
  const WavePartials ctp = cd_value(tau + ht, y), ctm = cd_value(t_lo, y);
  WavePartials wc;
  wc.V = cc.V;
  wc.U = cc.U;
  wc.Th = cc.Th;
  wc.Vy = (cyp.V - cym.V) / (2.0 * hy);
  wc.Uy = (cyp.U - cym.U) / (2.0 * hy);
  wc.Thy = (cyp.Th - cym.Th) / (2.0 * hy);
  wc.Uyy = (cyp.U - 2.0 * cc.U + cym.U) / (hy * hy);
  wc.Thyy = (cyp.Th - 2.0 * cc.Th + cym.Th) / (hy * hy);
  wc.Vt = (ctp.V - ctm.V) / (tau + ht - t_lo);
  wc.Ut = (ctp.U - ctm.U) / (tau + ht - t_lo);
  wc.Tht = (ctp.Th - ctm.Th) / (tau + ht - t_lo);
  double mom_cd;
  defects(set.g, set.nu, wc, &mom_cd, &out.q_cd);
  return out;
}

}  // namespace visclimit::profiles
