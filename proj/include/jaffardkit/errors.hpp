#pragma once

#include <stdexcept>
#include <string>

namespace jaffardkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument values (domain violations, bad preconditions).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Incompatible index sets or block dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An iteration failed to reach its tolerance within its cap.
// Carries the last iterate's estimate and residual as diagnostics.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double last_estimate,
                   double last_residual, long iterations)
      : Error(msg),
        last_estimate(last_estimate),
        last_residual(last_residual),
        iterations(iterations) {}

  double last_estimate = 0.0;
  double last_residual = 0.0;
  long iterations = 0;
};

// Matrix numerically singular; carries pivot diagnostics.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& msg, double min_pivot, double max_pivot)
      : Error(msg), min_pivot(min_pivot), max_pivot(max_pivot) {}

  double min_pivot = 0.0;
  double max_pivot = 0.0;
};

// Not enough usable data for a least-squares fit.
class FitError : public Error {
 public:
  using Error::Error;
};

// Overflow / NaN detected in a numeric kernel.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace jaffardkit
