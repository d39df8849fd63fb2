#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace steklov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of a function
/// (negative radius, r beyond pi/sqrt(k), x outside [0, pi/2], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A descriptor (profile, domain, solver configuration) failed validation.
/// `field` names the offending quantity; `where` carries the sample
/// location (radius or angle) when the failure is pointwise.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message, double where = 0.0)
      : Error(field + ": " + message), field_(std::move(field)), where_(where) {}

  const std::string& field() const noexcept { return field_; }
  double where() const noexcept { return where_; }

 private:
  std::string field_;
  double where_;
};

/// A hypothesis required by a comparison result does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numerical solver could not produce an admissible answer.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
