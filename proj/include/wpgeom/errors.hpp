#pragma once

#include <stdexcept>
#include <string>

namespace wpgeom {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands with incompatible dimensions, base points or truncation orders.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numerical precondition failed (singular matrix, non-positive pairing,
/// rank deficiency, invalid argument range).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A prepotential failed the normalization required at the base point.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wpgeom
