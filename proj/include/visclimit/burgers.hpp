#pragma once

namespace visclimit::profiles {

// Rarefaction-wave solution of the inviscid Burgers Riemann problem:
// w_-, y/tau, w_+ depending on where y/tau falls. Requires w_- <= w_+ and
// tau > 0.
double burgers_exact(double w_minus, double w_plus, double tau, double y);

struct BurgersValue {
  double w;     // w^R(tau, y)
  double w_y;   // dw/dy
  double w_yy;  // d2w/dy2
};

// Smooth Burgers solution from the tanh-smoothed Riemann data
// w_0(y) = (w_+ + w_-)/2 + ((w_+ - w_-)/2) tanh y, evolved by
// characteristics: w = w_0(x_0) with x_0 + w_0(x_0) tau = y. The implicit
// equation is solved by safeguarded Newton with residual below
// 1e-12 (1 + |y|). Requires w_- <= w_+ and tau >= 0.
BurgersValue burgers_smooth(double w_minus, double w_plus, double tau, double y);

}  // namespace visclimit::profiles
