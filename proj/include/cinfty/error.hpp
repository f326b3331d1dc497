#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cinfty {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t pos)
      : Error(message + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// A recip node evaluated where its argument vanishes, or a non-finite result.
struct DomainError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ArityError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

/// Elements, forms or maps from different ring presentations were mixed.
struct PresentationMismatch : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct SamplingFailed : Error {
  using Error::Error;
};

}  // namespace cinfty
