#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A documented precondition does not hold (inhomogeneous input, degree out of
/// range, mismatched dimensions, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The form defines a cone: Ann(f) has a nonzero element of degree 1.
class ConeError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// An exact identity that must hold failed. Indicates an arithmetic bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace apolar
