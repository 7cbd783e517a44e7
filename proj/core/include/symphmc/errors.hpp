#pragma once

#include <stdexcept>
#include <string>

namespace symphmc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel or processor parameter makes a coefficient undefined (e.g. 6b - 1 = 0).
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// A state produced by a flow contains NaN or Inf.
class NonFiniteState : public Error {
 public:
  using Error::Error;
};

/// The kernel is not linearly stable at the requested step size.
class UnstableStep : public Error {
 public:
  using Error::Error;
};

/// The tuner was started from a point with infinite objective.
class NoDescent : public Error {
 public:
  using Error::Error;
};

/// A processed Rowlands leg needs at least two steps.
class InsufficientSteps : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace symphmc
