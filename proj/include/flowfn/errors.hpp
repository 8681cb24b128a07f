#pragma once

#include <stdexcept>
#include <string>

namespace flowfn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between an operation and its operands.
struct ShapeError : Error {
  using Error::Error;
};

// A query time lies beyond the horizon covered by a piecewise-constant signal.
struct SignalExhaustedError : Error {
  using Error::Error;
};

// Adaptive step size collapsed below the representable minimum.
struct StiffnessError : Error {
  using Error::Error;
};

// Malformed or version-incompatible file contents.
struct FormatError : Error {
  using Error::Error;
};

// Invalid configuration (unknown system, bad key, inconsistent values).
struct ConfigError : Error {
  using Error::Error;
};

// Non-finite loss or gradient encountered during optimisation.
struct TrainingDivergedError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace flowfn
