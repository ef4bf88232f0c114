#pragma once

#include <stdexcept>
#include <string>

namespace starlab {

/// Malformed scalar or matrix text / JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix shapes or mixed coefficient rings.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's documented precondition does not hold for the given input
/// (e.g. a supplied inverse is not in the required class).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the library re-verifies failed. This is a bug certificate.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starlab
