#include "visclimit/numerics.hpp"

#include <cassert>
#include <cmath>

namespace visclimit::num {

LinFit linfit(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const size_t n = x.size();
  if (n < 2) throw Error("linfit: need at least two points");
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw Error("linfit: degenerate abscissae");
  LinFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  return out;
}

void tridiag_solve(std::span<const double> sub, std::span<double> diag,
                   std::span<const double> sup, std::span<double> d) {
  const size_t n = diag.size();
  assert(sub.size() == n - 1 && sup.size() == n - 1 && d.size() == n);
  for (size_t i = 1; i < n; ++i) {
    const double w = sub[i - 1] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    d[i] -= w * d[i - 1];
  }
  d[n - 1] /= diag[n - 1];
  for (size_t i = n - 1; i-- > 0;) d[i] = (d[i] - sup[i] * d[i + 1]) / diag[i];
}

UniformTable::UniformTable(double x0, double h, std::vector<double> y, double clamp_left,
                           double clamp_right)
    : x0_(x0), h_(h), y_(std::move(y)), clamp_left_(clamp_left), clamp_right_(clamp_right) {
  if (y_.size() < 4 || h_ <= 0.0) throw Error("UniformTable: need >= 4 points, h > 0");
}

double UniformTable::operator()(double x) const {
  const auto n = static_cast<long>(y_.size());
  if (x <= x0_) return clamp_left_;
  if (x >= x0_ + h_ * static_cast<double>(n - 1)) return clamp_right_;
  const double s = (x - x0_) / h_;
  long i = static_cast<long>(std::floor(s));
  if (i < 1) i = 1;
  if (i > n - 3) i = n - 3;
  const double t = s - static_cast<double>(i);
  // Lagrange weights on nodes i-1, i, i+1, i+2 with local coordinate t.
  const double wm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w0 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  const double w1 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  const double w2 = (t + 1.0) * t * (t - 1.0) / 6.0;
  return wm1 * y_[i - 1] + w0 * y_[i] + w1 * y_[i + 1] + w2 * y_[i + 2];
}

}  // namespace visclimit::num
