#pragma once

#include <stdexcept>
#include <string>

namespace forcelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, graph-map files, codes).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A graph map violates one of its structural invariants.
class InvalidGraphMap : public Error {
 public:
  using Error::Error;
};

/// A closed path requested from a transition graph uses a missing arc.
class PathNotPresent : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of a computation (e.g. a non-expanding
/// composition along a closed path of a map that passed the BH checks).
class Inconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace forcelab
