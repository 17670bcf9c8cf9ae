#pragma once

#include "visclimit/burgers.hpp"
#include "visclimit/riemann.hpp"
#include "visclimit/selfsim.hpp"

namespace visclimit::profiles {

// Values and the partial derivatives needed to evaluate the scaled
// Navier-Stokes residual of a profile.
struct WavePartials {
  double V = 0, U = 0, Th = 0;
  double Vy = 0, Uy = 0, Thy = 0;
  double Vt = 0, Ut = 0, Tht = 0;
  double Uyy = 0, Thyy = 0;
};

// The approximate wave pattern of the scaled system: viscous contact wave
// between the two intermediate states plus the two smoothed Burgers
// rarefactions, superposed per the pattern's anchor constants.
struct WaveProfileSet {
  gas::GasParams g;
  double nu;
  riemann::RiemannPattern pattern;
  SelfSimilarProfile contact;
  double p_contact;  // shared contact pressure (the CD's far-field pressure)
  double u_contact;  // shared contact velocity
  struct Endpoints {
    double w_minus, w_plus;
  };
  Endpoints burgers1;  // lambda_1(left), lambda_1(star)
  Endpoints burgers3;  // lambda_3(star_upper), lambda_3(right)
};

WaveProfileSet build_wave_profile_set(const gas::GasParams& g, double nu,
                                      const riemann::RiemannPattern& pattern,
                                      const SelfSimilarOptions& opts = {});

// Viscous contact wave (V, U, Theta)^CD and partials at (tau, y), tau >= 0.
WavePartials viscous_contact_eval(const WaveProfileSet& set, double tau, double y);

// Approximate i-rarefaction (i = 1 or 3) and partials; the Burgers profile
// is evaluated at time 1 + tau.
WavePartials approx_rarefaction_eval(const WaveProfileSet& set, int family, double tau, double y);

// Componentwise sum of the three profiles minus the intermediate-state
// constants. Throws PositivityError when V or Theta is non-positive.
WavePartials superposition_eval(const WaveProfileSet& set, double tau, double y);

struct ProfileResiduals {
  double q_cd;         // energy defect of the viscous contact wave alone
  double q1;           // momentum defect of the superposition
  double q2;           // energy defect of the superposition
  double mass_defect;  // V_tau - U_y of the superposition (identically ~0)
};

ProfileResiduals residuals(const WaveProfileSet& set, double tau, double y);

// Same defects assembled from central finite differences of the profile
// values; cross-check for the analytic chain rules.
ProfileResiduals residuals_fd(const WaveProfileSet& set, double tau, double y,
                              double step_scale = 1e-5);

}  // namespace visclimit::profiles
