#pragma once

#include <stdexcept>
#include <string>

namespace vacrad {

// Base class for all library failures so callers can catch in one arm.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Add/subtract of quantities with unequal dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A magnitude stopped being a finite real (overflow, 0/0, sqrt of negative).
struct NonFinite : Error {
  using Error::Error;
};

// A direction was requested from a zero-length vector.
struct ZeroVector : Error {
  using Error::Error;
};

// A speed at or above c was fed to a relativistic expression.
struct SuperluminalInput : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of a formula (e.g. the
// log in the zero-point displacement needs 0 < omega < nu_e).
struct DomainError : Error {
  using Error::Error;
};

// Thrown by the literal-mode stepper when a velocity update reaches c.
// The step index is filled in by integrate(); a bare step() reports -1.
class StepRejected : public Error {
public:
  StepRejected(const std::string& what, long step_index = -1)
      : Error(what), step_index_(step_index) {}
  long step_index() const noexcept { return step_index_; }

private:
  long step_index_;
};

}  // namespace vacrad
