#pragma once

#include <stdexcept>
#include <string>

namespace qcomb {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic between cyclotomic values of incompatible conductors.
struct ConductorMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

/// Vector/matrix extents do not match.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A guarded enumeration or closure grew past its cap.
struct CapExceededError : Error {
  using Error::Error;
};

struct NotTransitiveError : Error {
  using Error::Error;
};

/// Lattice trajectory violates the light-cone or parity constraint.
struct LightConeError : Error {
  using Error::Error;
};

/// A state vector projects to zero in the requested invariant subspace.
struct ZeroProjectionError : Error {
  using Error::Error;
};

/// Generic precondition violation (bad parameter range, malformed input).
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qcomb
