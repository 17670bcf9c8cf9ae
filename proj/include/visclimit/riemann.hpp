#pragma once

#include "visclimit/gas.hpp"

namespace visclimit::riemann {

// Head/tail characteristic speeds of a rarefaction fan. head is the
// outermost speed (adjacent to the constant outer state), tail the
// innermost; head <= tail within each family.
struct Fan {
  double head;
  double tail;
  bool degenerate() const { return head == tail; }
};

// Intermediate states and fan speeds of an R1-CD-R3 Riemann solution.
// The contact sits at x = 0 (lambda_2 = 0 in Lagrangian coordinates);
// star is the state between the 1-fan and the contact, star_upper the
// state between the contact and the 3-fan.
struct RiemannPattern {
  gas::GasParams g;
  gas::State left, right, star, star_upper;
  Fan fan1, fan3;
  double p_contact;       // common contact pressure p_m
  double solve_residual;  // |u_* - u^*| at the accepted root
};

// -int_{ref.v}^{v} lambda_family(eta, s_ref) d eta, adaptive Simpson with
// absolute tolerance 1e-11. u along the wave curve is ref.u plus this.
double velocity_change_along_curve(const gas::GasParams& g, const gas::State& ref, double v,
                                   int family);

// Solve for the two intermediate states of the R1-CD-R3 configuration by
// safeguarded Newton/bisection on the contact pressure. Throws
// PatternClassError when the data would need a compression wave and
// NoBracketError when no contact pressure in (0, min(p_-, p_+)] exists.
RiemannPattern solve_pattern(const gas::GasParams& g, const gas::State& left,
                             const gas::State& right);

// Pointwise self-similar exact Euler solution, t > 0. Constant states
// outside the fans; inside an i-fan v solves lambda_i(v, s_anchor) = x/t;
// the state jumps from star to star_upper across x = 0.
gas::State eval_exact(const RiemannPattern& pattern, double t, double x);

}  // namespace visclimit::riemann
