#pragma once

#include <vector>

#include "visclimit/numerics.hpp"

namespace visclimit::profiles {

struct SelfSimilarOptions {
  double xi_halfwidth = 0.0;  // 0 = choose from the Gaussian tail bound
  int n_points = 4001;
  double newton_tol = 1e-10;
  int max_iter = 50;
};

// Tabulated solution Theta_hat(xi) of the two-point BVP
//   -(xi/2) Theta' = a (Theta'/Theta)',  Theta(-Xi) = theta_left,
//   Theta(+Xi) = theta_right,
// discretized by second-order central differences and solved by damped
// Newton from the linear interpolant.
class SelfSimilarProfile {
 public:
  double theta_left = 1.0, theta_right = 1.0;
  double a = 1.0;
  double xi_max = 0.0;  // Xi
  double h = 0.0;
  std::vector<double> xi, theta_hat, theta_hat_prime;
  double discrete_residual = 0.0;  // sup-norm residual of the Newton system

  double value(double xi_query) const {
    return constant() ? theta_left : table_theta_(xi_query);
  }
  double deriv(double xi_query) const { return constant() ? 0.0 : table_prime_(xi_query); }
  bool constant() const { return theta_left == theta_right; }

  void build_tables();

 private:
  num::UniformTable table_theta_, table_prime_;
};

// Smallest half-width with |theta_right - theta_left| exp(-Xi^2/(8a))
// below 1e-9, floored at 12.
double default_xi_halfwidth(double theta_left, double theta_right, double a);

SelfSimilarProfile solve_self_similar(double theta_left, double theta_right, double a,
                                      const SelfSimilarOptions& opts = {});

}  // namespace visclimit::profiles
