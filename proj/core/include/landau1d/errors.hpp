#pragma once

#include <stdexcept>
#include <string>

namespace landau1d {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature node budget exhausted before the requested tolerance was met.
class QuadratureNotConverged : public Error {
 public:
  QuadratureNotConverged(const std::string& what, double best_value,
                         double error_estimate)
      : Error(what), best_value(best_value), error_estimate(error_estimate) {}
  double best_value;
  double error_estimate;
};

/// Operation invoked with a PotentialKind it does not support.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Grid spacing too coarse to resolve the potential on the grid.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

/// Iterative eigensolver hit its iteration or memory cap.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations, double best_residual)
      : Error(what), iterations(iterations), best_residual(best_residual) {}
  int iterations;
  double best_residual;
};

/// Convergence ladder lacks the entries Richardson extrapolation needs.
class LadderInsufficient : public Error {
 public:
  using Error::Error;
};

/// Bisection scan found no sign change on the initial interval.
class BracketNotFound : public Error {
 public:
  using Error::Error;
};

/// Landscape classification requested within 1e-9 of a regime boundary charge.
class DegenerateAtBoundary : public Error {
 public:
  using Error::Error;
};

}  // namespace landau1d
