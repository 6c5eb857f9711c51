#pragma once

#include <stdexcept>
#include <string>

namespace pars {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Declared but unsupported feature (e.g. a norm other than l2).
struct UnsupportedFeatureError : Error {
  using Error::Error;
};

// A claimed envelope bound was observed to fail.
struct EnvelopeViolation : Error {
  using Error::Error;
};

// Declared structural constants (strong concavity, smoothness, Holder)
// failed their validation probes.
struct InvalidStructureError : Error {
  using Error::Error;
};

// An internal algorithm invariant failed; indicates a bug or corrupted inputs.
struct InvariantViolation : Error {
  using Error::Error;
};

// Evaluation budget exceeded (grid construction).
struct BudgetError : Error {
  using Error::Error;
};

// Too few observations for the requested statistical test.
struct InsufficientDataError : Error {
  using Error::Error;
};

// Mode search did not converge within its fixed budget.
struct NoModeError : Error {
  using Error::Error;
};

// Malformed configuration or CLI input.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pars
