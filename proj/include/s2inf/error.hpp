#pragma once

#include <stdexcept>
#include <string>

namespace s2inf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live at different levels of the tower and were not lifted.
class LevelMismatch : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A dense table or explicit tensor would exceed the configured resource cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (permutation, nice set, alpha, range).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree. Always a bug
/// or a falsified mathematical claim, never a user error.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace s2inf
