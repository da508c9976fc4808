#pragma once

#include <stdexcept>
#include <string>

namespace gluq {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible tensor shapes, dimensions, or sizes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values (non-positive length scale, overlapping
/// well patches, inconsistent model layout, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure: non-finite values, solver non-convergence, degenerate
/// mixtures.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// File format or I/O failure (bad magic, CRC mismatch, truncation).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gluq
