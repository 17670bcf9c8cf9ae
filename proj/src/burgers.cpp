#include "visclimit/burgers.hpp"

#include <algorithm>
#include <cmath>

#include "visclimit/numerics.hpp"

namespace visclimit::profiles {

double burgers_exact(double w_minus, double w_plus, double tau, double y) {
  if (!(w_minus <= w_plus)) throw Error("burgers_exact: require w_- <= w_+");
  if (!(tau > 0.0)) throw Error("burgers_exact: require tau > 0");
  const double s = y / tau;
  return std::clamp(s, w_minus, w_plus);
}

BurgersValue burgers_smooth(double w_minus, double w_plus, double tau, double y) {
  if (!(w_minus <= w_plus)) throw Error("burgers_smooth: require w_- <= w_+");
  if (!(tau >= 0.0)) throw Error("burgers_smooth: require tau >= 0");
  const double half = 0.5 * (w_plus - w_minus);
  if (half < 1e-300) return {w_minus, 0.0, 0.0};
  const double mid = 0.5 * (w_plus + w_minus);

  double x0;
  if (tau == 0.0) {
    x0 = y;
  } else {
    // x0 + w0(x0) tau = y; the map is strictly increasing, with
    // x0 in [y - w_+ tau, y - w_- tau].
    const double lo = y - w_plus * tau, hi = y - w_minus * tau;
    const double seed = y - tau * std::clamp(y / tau, w_minus, w_plus);
    const double ftol = 1e-12 * (1.0 + std::abs(y));
    auto fdf = [&](double x) {
      const double th = std::tanh(x);
      return num::FdF{x + (mid + half * th) * tau - y, 1.0 + half * (1.0 - th * th) * tau};
    };
    x0 = num::newton_bisect(fdf, lo - 1.0, hi + 1.0, seed, ftol);
  }

  const double th = std::tanh(x0);
  const double g = half * (1.0 - th * th);  // w0'(x0)
  const double denom = 1.0 + g * tau;
  BurgersValue out;
  out.w = mid + half * th;
  out.w_y = g / denom;
  out.w_yy = (-2.0 * th * g) / (denom * denom * denom);  // w0''(x0) = -2 tanh(x0) w0'(x0)
  return out;
}

}  // namespace visclimit::profiles
