#pragma once

#include <stdexcept>
#include <string>

namespace wheelset {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a general-position precondition (zero sign detected,
/// collinear triple, point collinear with the hub, point equal to the hub...).
struct DegenerateError : Error {
  using Error::Error;
};

/// Point set is not a conowheel set: some designated hull point is not
/// extreme, or the set is otherwise outside the domain of the planar engine.
struct NotConowheelError : Error {
  using Error::Error;
};

/// A size bound on an exhaustive operation was exceeded.
struct BoundError : Error {
  using Error::Error;
};

/// Malformed textual input (point files, matrices, necklace strings, ...).
struct ParseError : Error {
  using Error::Error;
};

/// An embracing-count profile admits no point configuration.
struct InconsistentProfileError : Error {
  using Error::Error;
};

/// A triangle family is not the embracing family of any point set.
struct NotRealizableError : Error {
  using Error::Error;
};

/// Rejection sampling for a generic flat ran out of attempts.
struct FlatRetryError : Error {
  using Error::Error;
};

}  // namespace wheelset
