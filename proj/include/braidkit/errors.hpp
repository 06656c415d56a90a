#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed braid word text or out-of-range generator.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in braid groups of different strand counts.
class StrandMismatch : public Error {
 public:
  StrandMismatch(int a, int b)
      : Error("strand-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A configured size bound was hit (super summit set cap, crossing cap, ...).
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A move or decomposition reference that does not fit the word it is applied to.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the bounds a bounded computation was configured with.
class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidkit
