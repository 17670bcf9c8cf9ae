#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "visclimit/errors.hpp"

namespace visclimit::num {

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance
// abs_tol. Throws QuadratureError (carrying the achieved tolerance) if the
// depth cap is reached before the local error estimates fall under abs_tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (a == b) return 0.0;
  double unresolved = 0.0;

  struct Rec {
    F& f;
    double& unresolved;
    double run(double x0, double f0, double x2, double f2, double x1, double f1, double whole,
               double tol, int depth) {
      const double xl = 0.5 * (x0 + x1), xr = 0.5 * (x1 + x2);
      const double fl = f(xl), fr = f(xr);
      const double sl = (f0 + 4.0 * fl + f1) * (x1 - x0) / 6.0;
      const double sr = (f1 + 4.0 * fr + f2) * (x2 - x1) / 6.0;
      const double err = sl + sr - whole;
      if (std::abs(err) <= 15.0 * tol) return sl + sr + err / 15.0;
      if (depth <= 0) {
        unresolved += std::abs(err) / 15.0;
        return sl + sr + err / 15.0;
      }
      return run(x0, f0, x1, f1, xl, fl, sl, 0.5 * tol, depth - 1) +
             run(x1, f1, x2, f2, xr, fr, sr, 0.5 * tol, depth - 1);
    }
  };

  const double fa = f(a), fb = f(b), m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (fa + 4.0 * fm + fb) * (b - a) / 6.0;
  Rec rec{f, unresolved};
  const double result = rec.run(a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
  if (unresolved > 0.5 * abs_tol)
    throw QuadratureError("adaptive_simpson: tolerance not reached", abs_tol + unresolved);
  return result;
}

struct FdF {
  double f, df;
};

// Safeguarded Newton for a monotone increasing function with
// f(lo) <= 0 <= f(hi). Newton steps that leave the bracket fall back to
// bisection. Stops when |f| <= ftol or the bracket shrinks below xtol.
template <class F>
double newton_bisect(F&& fdf, double lo, double hi, double x0, double ftol, double xtol = 0.0,
                     int max_iter = 200) {
  double x = x0;
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    const FdF e = fdf(x);
    if (std::abs(e.f) <= ftol) return x;
    if (e.f > 0.0)
      hi = x;
    else
      lo = x;
    double cand = x - e.f / e.df;
    if (!std::isfinite(cand) || !(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    if (hi - lo <= xtol * (std::abs(lo) + std::abs(hi)) * 0.5 + xtol) return cand;
    x = cand;
  }
  throw Error("newton_bisect: no convergence");
}

struct LinFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

// Least-squares line through (x, y) with coefficient of determination.
LinFit linfit(std::span<const double> x, std::span<const double> y);

// Thomas algorithm; sub/diag/sup are the three bands, d the right-hand
// side (overwritten with the solution). No pivoting.
void tridiag_solve(std::span<const double> sub, std::span<double> diag,
                   std::span<const double> sup, std::span<double> d);

// Cubic (4-point Lagrange) interpolation of values tabulated on a uniform
// grid, clamped to constants outside the table.
class UniformTable {
 public:
  UniformTable() = default;
  UniformTable(double x0, double h, std::vector<double> y, double clamp_left, double clamp_right);
  double operator()(double x) const;
  double x_min() const { return x0_; }
  double x_max() const { return x0_ + h_ * static_cast<double>(y_.size() - 1); }

 private:
  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> y_;
  double clamp_left_ = 0.0, clamp_right_ = 0.0;
};

}  // namespace visclimit::num
