#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbvf {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad spec, input outside its box, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A query point lies outside the grid on a non-periodic dimension.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Non-finite values, CFL violations, stationary iteration not converging.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class StepSizeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// The min-norm QP has no point in the box satisfying the halfspace constraint.
class InfeasibleQpError : public Error {
 public:
  InfeasibleQpError(const std::string& what, double best_slack)
      : Error(what), best_slack_(best_slack) {}
  double best_slack() const noexcept { return best_slack_; }

 private:
  double best_slack_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class FormatErrorCode { kBadMagic, kBadHeader, kTruncated, kDimensionMismatch };

class FormatError : public IoError {
 public:
  FormatError(FormatErrorCode code, const std::string& what) : IoError(what), code_(code) {}
  FormatErrorCode code() const noexcept { return code_; }

 private:
  FormatErrorCode code_;
};

}  // namespace cbvf
