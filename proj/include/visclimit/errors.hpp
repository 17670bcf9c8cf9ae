#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace visclimit {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration input (file parse, invalid field). Carries a
// "file:line:" style prefix when it originates from a config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Riemann data outside the R1-CD-R3 class; names the violated
// admissibility inequality.
class PatternClassError : public Error {
 public:
  PatternClassError(const std::string& msg, std::string violated_)
      : Error(msg), violated(std::move(violated_)) {}
  std::string violated;
};

// Root bracketing failed (e.g. vacuum-like Riemann data).
class NoBracketError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& msg, double achieved_tol_)
      : Error(msg), achieved_tol(achieved_tol_) {}
  double achieved_tol;
};

// Newton iteration failed to converge; carries the residual history.
class NewtonError : public Error {
 public:
  NewtonError(const std::string& msg, std::vector<double> trace_)
      : Error(msg), trace(std::move(trace_)) {}
  std::vector<double> trace;
};

// Positivity of v or theta lost during integration.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& msg, double tau_, double y_)
      : Error(msg), tau(tau_), y(y_) {}
  double tau, y;
};

// A wave reached the frozen far-field boundary.
class BoundaryTouchError : public Error {
 public:
  BoundaryTouchError(const std::string& msg, double tau_) : Error(msg), tau(tau_) {}
  double tau;
};

// No grid point satisfies the requested space-time region.
class EmptyRegionError : public Error {
 public:
  using Error::Error;
};

}  // namespace visclimit
