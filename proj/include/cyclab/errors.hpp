#pragma once

#include <stdexcept>
#include <string>

namespace cyclab {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An input object violates its defining identity: associativity, a unit
/// claim, Jacobi, naturality, d^2 = 0 (CLI exit code 3).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Matrix/space shapes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Ambient space exceeds the configured limit (CLI exit code 4).
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// Basis elements allowed in any single ambient space.
inline constexpr std::size_t kResourceLimit = 500000;

void check_resource(std::size_t ambient, const std::string& what);

}  // namespace cyclab
