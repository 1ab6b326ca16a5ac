#pragma once

#include <stdexcept>
#include <string>

namespace sawsim {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid physical parameters; carries the offending field name.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& msg)
      : Error(msg), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Grid construction/compatibility problems (coarse, narrow, mismatched).
class GridError : public Error {
 public:
  using Error::Error;
};

// Pole of the piezoelectric stiffening term (eps_ratio == 1).
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Time step violates the stability bound.
class CflError : public Error {
 public:
  using Error::Error;
};

// Non-finite or overflowing field values during time stepping.
class StabilityError : public Error {
 public:
  StabilityError(const std::string& msg, long step) : Error(msg), step_(step) {}
  long step() const { return step_; }

 private:
  long step_ = 0;
};

// Least-squares fit rejected (too few samples, non-monotone, non-exponential).
class FitError : public Error {
 public:
  using Error::Error;
};

// Configuration file / CLI override problems. Maps to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sawsim
