#pragma once

#include <stdexcept>
#include <string>

namespace ulacov {

/// Bad run configuration: invalid parameter ranges, malformed config files,
/// step sizes violating stability constraints.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad argument to a library call (dimension mismatch, empty input, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite values encountered during computation.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A run was refused because its estimated cost exceeds the configured cap.
class RuntimeGuardError : public std::runtime_error {
 public:
  RuntimeGuardError(const std::string& what, double estimated_grad_evals)
      : std::runtime_error(what), estimated_grad_evals(estimated_grad_evals) {}

  double estimated_grad_evals;
};

}  // namespace ulacov
