#pragma once

#include <stdexcept>
#include <string>

namespace liefold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad type, bad index, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed structure failed one of its checked invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace liefold
