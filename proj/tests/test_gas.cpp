#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "visclimit/gas.hpp"

using namespace visclimit;
using gas::GasParams;
using gas::State;

TEST_CASE("pressure") {
  CHECK(gas::pressure(GasParams(5.0 / 3.0, 1.0), State(1, 0, 1)) == doctest::Approx(1.0));
  CHECK(gas::pressure(GasParams(5.0 / 3.0, 1.0), State(2, 0, 1)) == doctest::Approx(0.5));
  CHECK(gas::pressure(GasParams(1.4, 287.0), State(0.8, 3, 300)) == doctest::Approx(107625.0));
}

TEST_CASE("internal energy") {
  CHECK(gas::internal_energy(GasParams(5.0 / 3.0, 1.0), State(1, 0, 1)) == doctest::Approx(1.5));
  CHECK(gas::internal_energy(GasParams(2.0, 1.0), State(1, 0, 2)) == doctest::Approx(2.0));
  CHECK(gas::internal_energy(GasParams(1.4, 287.0), State(1, 0, 300)) ==
        doctest::Approx(215250.0));
}

TEST_CASE("entropy normalization and isentrope identity") {
  const GasParams g(5.0 / 3.0, 1.0);
  CHECK(gas::entropy(g, State(1, 0, 1)) == doctest::Approx(0.0).epsilon(1e-15));
  // theta2 = theta1 (v1/v2)^{gamma-1} implies equal entropies.
  const State a(0.7, 0, 1.3);
  const double theta2 = a.theta * std::pow(a.v / 2.9, g.gamma - 1.0);
  CHECK(gas::entropy(g, State(2.9, 0, theta2)) ==
        doctest::Approx(gas::entropy(g, a)).epsilon(1e-14));
  // ln 2 (1 + (3/2)(-2/3)) = 0.
  CHECK(gas::entropy(g, State(2, 0, std::pow(2.0, -2.0 / 3.0))) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("eigenvalues") {
  const GasParams g(5.0 / 3.0, 1.0);
  const State s(1, 0, 1);
  CHECK(gas::lambda(g, s, 3) == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
  CHECK(gas::lambda(g, s, 2) == 0.0);
  CHECK(gas::lambda(g, State(0.33, 2.5, 4.1), 2) == 0.0);
  CHECK(gas::lambda(g, s, 1) == -gas::lambda(g, s, 3));

  // lambda_1 < 0 < lambda_3 and exact sign symmetry across a state sample.
  for (double v : {0.2, 0.9, 3.7})
    for (double th : {0.4, 1.0, 12.0}) {
      const State q(v, -1.0, th);
      CHECK(gas::lambda(g, q, 1) < 0.0);
      CHECK(gas::lambda(g, q, 3) > 0.0);
      CHECK(gas::lambda(g, q, 1) == -gas::lambda(g, q, 3));
    }
}

TEST_CASE("theta_on_isentrope") {
  const GasParams g2(2.0, 1.0);
  const State ref(1, 0, 1);
  CHECK(gas::theta_on_isentrope(g2, ref, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gas::theta_on_isentrope(g2, ref, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  const GasParams g53(5.0 / 3.0, 1.0);
  CHECK(gas::theta_on_isentrope(g53, ref, 8.0) == doctest::Approx(0.25).epsilon(1e-15));

  // entropy(theta_on_isentrope(ref, v), v) == entropy(ref) over two decades.
  const GasParams g(1.4, 2.0);
  const State anchor(0.8, 1.0, 1.7);
  const double s0 = gas::entropy(g, anchor);
  for (int k = 0; k <= 40; ++k) {
    const double v = anchor.v * std::pow(10.0, -1.0 + 2.0 * k / 40.0);
    const double s = gas::entropy(g, State(v, 0, gas::theta_on_isentrope(g, anchor, v)));
    CHECK(std::abs(s - s0) <= 1e-12 * std::max(1.0, std::abs(s0)));
  }
}

TEST_CASE("wave strength") {
  const State a(1, 0, 1);
  CHECK(gas::wave_strength(a, a) == 0.0);
  CHECK(gas::wave_strength(a, State(2, 0, 1)) == doctest::Approx(1.0));
  CHECK(gas::wave_strength(State(1, 0, 1), State(4, 4, 1)) == doctest::Approx(5.0));
}

TEST_CASE("monotonicity in theta and along isentropes") {
  const GasParams g(1.4, 1.0);
  double prev_p = 0.0, prev_e = 0.0;
  for (double th = 0.1; th < 3.0; th += 0.1) {
    const State s(0.8, 0, th);
    CHECK(gas::pressure(g, s) > prev_p);
    CHECK(gas::internal_energy(g, s) > prev_e);
    prev_p = gas::pressure(g, s);
    prev_e = gas::internal_energy(g, s);
  }
  // lambda_3 at fixed entropy strictly decreasing in v.
  const State ref(1, 0, 1);
  double prev = 1e300;
  for (double v = 0.5; v < 4.0; v += 0.25) {
    const double lam = gas::lambda_on_isentrope(g, ref, v, 3);
    CHECK(lam < prev);
    prev = lam;
  }
}

TEST_CASE("invalid construction rejected") {
  CHECK_THROWS_AS(GasParams(1.0, 1.0), Error);
  CHECK_THROWS_AS(GasParams(1.4, 0.0), Error);
  CHECK_THROWS_AS(GasParams(std::nan(""), 1.0), Error);
  CHECK_THROWS_AS(State(0.0, 0, 1), Error);
  CHECK_THROWS_AS(State(1, 0, -2), Error);
  CHECK_THROWS_AS(State(1, std::nan(""), 1), Error);
}
