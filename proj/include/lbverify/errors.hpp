#pragma once

#include <stdexcept>
#include <string>

namespace lb {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the physical domain (Lambda <= 0, |E~| < 1, b > 1/2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A function argument outside the region where the quantity is real or defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exponential overflow of the closed forms; carries the admissible radial bound.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double bound) : Error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

/// Step count too small for the requested integration.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Hypergeometric evaluation did not converge.
class SpecialFunctionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lb
