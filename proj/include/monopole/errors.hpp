#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector that must be nonzero (e.g. the argument of the radial unit j(x)) vanished.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// exp_pure was handed a quaternion with a nonzero scalar part.
class NotPureError : public Error {
 public:
  using Error::Error;
};

/// The segment from x to x - a passes through the monopole at the origin.
class SingularSegmentError : public Error {
 public:
  using Error::Error;
};

/// A free-algebra element failed the Dynkin round trip.
class NotLieElementError : public Error {
 public:
  using Error::Error;
};

/// A Fourier polynomial exceeded the configured total-degree cap.
class DegreeCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (CLI flags, family specs, symbol expressions, JSON).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace monopole
