#pragma once

#include <stdexcept>

namespace qsat {

// Base class for toolkit errors caused by invalid inputs or exceeded
// limits (as opposed to programming bugs, which assert).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameters : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct LimitExceeded : Error {
  using Error::Error;
};
struct NotCoverable : Error {
  using Error::Error;
};
struct NotProductForm : Error {
  using Error::Error;
};
struct ContinuationFailure : Error {
  using Error::Error;
};
struct NoBracket : Error {
  using Error::Error;
};
struct QuadratureFailure : Error {
  using Error::Error;
};

}  // namespace qsat
