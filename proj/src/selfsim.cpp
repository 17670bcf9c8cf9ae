#include "visclimit/selfsim.hpp"

#include <algorithm>
#include <cmath>

namespace visclimit::profiles {

namespace {

// Residual of the central-difference discretization at interior nodes.
// F_i = a (G_{i+1/2} - G_{i-1/2}) / h^2 + xi_i (T_{i+1} - T_{i-1}) / (4h),
// G_{i+1/2} = (T_{i+1} - T_i) / m, m the arithmetic face mean.
void residual(const std::vector<double>& xi, const std::vector<double>& T, double a, double h,
              std::vector<double>& F) {
  const size_t n = T.size();
  const double ih2 = a / (h * h), i4h = 1.0 / (4.0 * h);
  for (size_t i = 1; i + 1 < n; ++i) {
    const double mp = 0.5 * (T[i] + T[i + 1]), mm = 0.5 * (T[i - 1] + T[i]);
    const double gp = (T[i + 1] - T[i]) / mp, gm = (T[i] - T[i - 1]) / mm;
    F[i - 1] = ih2 * (gp - gm) + xi[i] * (T[i + 1] - T[i - 1]) * i4h;
  }
}

double sup_norm(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double default_xi_halfwidth(double theta_left, double theta_right, double a) {
  const double gap = std::abs(theta_right - theta_left);
  if (gap <= 1e-9) return 12.0;
  return std::max(12.0, std::sqrt(8.0 * a * std::log(gap / 1e-9)) + 1.0);
}

void SelfSimilarProfile::build_tables() {
  table_theta_ = num::UniformTable(-xi_max, h, theta_hat, theta_left, theta_right);
  table_prime_ = num::UniformTable(-xi_max, h, theta_hat_prime, 0.0, 0.0);
}

SelfSimilarProfile solve_self_similar(double theta_left, double theta_right, double a,
                                      const SelfSimilarOptions& opts) {
  if (!(theta_left > 0.0) || !(theta_right > 0.0) || !(a > 0.0))
    throw Error("solve_self_similar: require positive temperatures and a");
  SelfSimilarProfile prof;
  prof.theta_left = theta_left;
  prof.theta_right = theta_right;
  prof.a = a;
  prof.xi_max =
      opts.xi_halfwidth > 0.0 ? opts.xi_halfwidth : default_xi_halfwidth(theta_left, theta_right, a);
  const int n = opts.n_points;
  if (n < 9) throw Error("solve_self_similar: n_points too small");
  prof.h = 2.0 * prof.xi_max / static_cast<double>(n - 1);

  prof.xi.resize(n);
  prof.theta_hat.resize(n);
  for (int i = 0; i < n; ++i) {
    prof.xi[i] = -prof.xi_max + prof.h * static_cast<double>(i);
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    prof.theta_hat[i] = theta_left + (theta_right - theta_left) * t;
  }

  std::vector<double>& T = prof.theta_hat;
  const size_t m = static_cast<size_t>(n) - 2;
  std::vector<double> F(m), sub(m - 1), diag(m), sup(m - 1), rhs(m), trial(n);
  std::vector<double> trace;

  if (theta_left != theta_right) {
    residual(prof.xi, T, a, prof.h, F);
    double fn = sup_norm(F);
    trace.push_back(fn);
    int iter = 0;
    const double ih2 = a / (prof.h * prof.h), i4h = 1.0 / (4.0 * prof.h);
    while (fn > opts.newton_tol) {
      if (++iter > opts.max_iter)
        throw NewtonError("solve_self_similar: Newton did not converge (Xi or n_points too coarse?)",
                          trace);
      for (size_t k = 0; k < m; ++k) {
        const size_t i = k + 1;
        const double mp = 0.5 * (T[i] + T[i + 1]), mm = 0.5 * (T[i - 1] + T[i]);
        const double dp = T[i + 1] - T[i], dm = T[i] - T[i - 1];
        const double dGp_dTi = -1.0 / mp - dp / (2.0 * mp * mp);
        const double dGp_dTip = 1.0 / mp - dp / (2.0 * mp * mp);
        const double dGm_dTim = -1.0 / mm - dm / (2.0 * mm * mm);
        const double dGm_dTi = 1.0 / mm - dm / (2.0 * mm * mm);
        diag[k] = ih2 * (dGp_dTi - dGm_dTi);
        if (k > 0) sub[k - 1] = ih2 * (-dGm_dTim) - prof.xi[i] * i4h;
        if (k + 1 < m) sup[k] = ih2 * dGp_dTip + prof.xi[i] * i4h;
        rhs[k] = -F[i - 1];
      }
      num::tridiag_solve(sub, diag, sup, rhs);

      double step = 1.0;
      double fn_new = fn;
      for (int halvings = 0; halvings < 40; ++halvings) {
        trial = T;
        bool positive = true;
        for (size_t k = 0; k < m; ++k) {
          trial[k + 1] += step * rhs[k];
          if (trial[k + 1] <= 0.0) positive = false;
        }
        if (positive) {
          residual(prof.xi, trial, a, prof.h, F);
          fn_new = sup_norm(F);
          if (fn_new < fn) break;
        }
        step *= 0.5;
      }
      if (!(fn_new < fn))
        throw NewtonError("solve_self_similar: damping stalled", trace);
      T = trial;
      fn = fn_new;
      trace.push_back(fn);
    }
    prof.discrete_residual = fn;
  }

  // Tabulate Theta' by fourth-order differences; the one-sided stencils sit
  // in the flat tails where the derivative is negligible anyway.
  prof.theta_hat_prime.assign(n, 0.0);
  if (theta_left == theta_right) {
    prof.build_tables();
    return prof;
  }
  const double i12h = 1.0 / (12.0 * prof.h);
  auto& P = prof.theta_hat_prime;
  P[0] = (-25.0 * T[0] + 48.0 * T[1] - 36.0 * T[2] + 16.0 * T[3] - 3.0 * T[4]) * i12h;
  P[1] = (-3.0 * T[0] - 10.0 * T[1] + 18.0 * T[2] - 6.0 * T[3] + T[4]) * i12h;
  for (int i = 2; i + 2 < n; ++i)
    P[i] = (-T[i + 2] + 8.0 * T[i + 1] - 8.0 * T[i - 1] + T[i - 2]) * i12h;
  P[n - 2] = (3.0 * T[n - 1] + 10.0 * T[n - 2] - 18.0 * T[n - 3] + 6.0 * T[n - 4] - T[n - 5]) * i12h;
  P[n - 1] =
      (25.0 * T[n - 1] - 48.0 * T[n - 2] + 36.0 * T[n - 3] - 16.0 * T[n - 4] + 3.0 * T[n - 5]) *
      i12h;

  prof.build_tables();
  return prof;
}

}  // namespace visclimit::profiles
