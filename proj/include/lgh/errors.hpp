#pragma once

#include <stdexcept>
#include <string>

namespace lgh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Division by a jet whose value vanishes.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// log or a non-integer power evaluated on (or too close to) the ray (-inf, 0].
class BranchCutError : public Error {
 public:
  using Error::Error;
};

class IsotropyError : public ParameterError {
 public:
  IsotropyError(const std::string& what, double residual)
      : ParameterError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class HomogeneityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class DegreeError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class DependenceError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Raised when an evaluation fails at a specific point of a basis sum.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Every candidate sample point was rejected (branch-cut guard or Q floor).
class SamplingExhaustedError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgh
