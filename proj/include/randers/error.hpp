#pragma once

#include <stdexcept>
#include <string>

namespace randers {

/// Error categories. They map one-to-one onto the C API status codes and
/// the CLI exit codes (1..4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed config JSON, expression syntax errors, dimension
/// mismatches, unknown example names.
struct ConfigError : Error {
  using Error::Error;
};

/// The field is not a valid Randers metric (some sampled |beta#| >= 1).
struct InvalidRandersError : Error {
  using Error::Error;
};

/// A compatible connection was requested for a field whose dual vector
/// field is not of constant Riemannian length.
struct NotBerwaldError : Error {
  using Error::Error;
};

/// Numerical failure: metric not positive definite, expression domain
/// error (sqrt of a nonpositive value, division by zero), curve leaving
/// the domain box, non-finite intermediate values.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace randers
