#pragma once

#include <stdexcept>
#include <string>

namespace tsys {

/// Base class for all recoverable input errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPartialOrder : Error {
  using Error::Error;
};

/// A partial order in which some pair lacks a meet or a join. Carries the
/// first offending pair.
struct NotALattice : Error {
  int x, y;
  NotALattice(int x_, int y_, const std::string& what_)
      : Error(what_ + " for elements (" + std::to_string(x_) + ", " +
              std::to_string(y_) + ")"),
        x(x_),
        y(y_) {}
};

struct NotAChain : Error {
  using Error::Error;
};

struct NotAPremodelPair : Error {
  using Error::Error;
};

struct NoFactorization : Error {
  using Error::Error;
};

struct NotAPartition : Error {
  using Error::Error;
};

struct CrossingPartition : Error {
  using Error::Error;
};

struct NotCompositionClosed : Error {
  using Error::Error;
};

struct NotAModelTree : Error {
  using Error::Error;
};

struct InvalidTriangulation : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A violated internal invariant. Never expected on any input; the CLI maps
/// this to exit code 2.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace tsys
