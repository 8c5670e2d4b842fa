#pragma once

#include <stdexcept>
#include <string>

namespace chemolv {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The 2x2 linear system defining the coexistence state has zero determinant.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// A computed equilibrium component is not strictly positive.
class NonpositiveEquilibrium : public Error {
 public:
  using Error::Error;
};

// Integrability exponent does not exceed the space dimension.
class InvalidExponent : public Error {
 public:
  using Error::Error;
};

// The admissible interval for the Lyapunov weight is empty.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

// A matrix handed to the definiteness test is not symmetric.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// Parameters do not lie in the competition regime a check requires.
class RegimeMismatch : public Error {
 public:
  using Error::Error;
};

// Iterative linear solve failed to reach its residual target.
class SolverDiverged : public Error {
 public:
  using Error::Error;
};

// A density field dropped below the negativity tolerance during a step.
class NegativityBreach : public Error {
 public:
  using Error::Error;
};

// A field magnitude crossed the configured blow-up threshold.
class BlowUpGuard : public Error {
 public:
  using Error::Error;
};

// A logarithmic Lyapunov term was evaluated at a nonpositive density.
class NonpositiveDensity : public Error {
 public:
  using Error::Error;
};

// A time series is too short or not ordered for trend analysis.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Malformed input document (not JSON, wrong type, missing field).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input violating a constraint; message names the field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Precondition violation on a direct API call.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace chemolv
