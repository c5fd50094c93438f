#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace biprab {

/// Base class for every error raised by the library.
///
/// `component()` names the idempotent component (1 or 2) that failed when the
/// failure happened inside a componentwise evaluation.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::optional<int> component = std::nullopt)
      : std::runtime_error(what), component_(component) {}

  std::optional<int> component() const noexcept { return component_; }

 private:
  std::optional<int> component_;
};

// Validation failures (CLI exit code 2).
class DomainError : public Error {
  using Error::Error;
};
class NullConeError : public DomainError {
  using DomainError::DomainError;
};
class PoleError : public DomainError {
  using DomainError::DomainError;
};
class GridError : public DomainError {
  using DomainError::DomainError;
};
class ContourError : public DomainError {
  using DomainError::DomainError;
};

// Numerical failures (CLI exit code 3).
class NumericalError : public Error {
  using Error::Error;
};
class NoConvergence : public NumericalError {
  using NumericalError::NumericalError;
};
class QuadratureFailure : public NumericalError {
 public:
  QuadratureFailure(const std::string& what, double error_estimate,
                    std::optional<int> component = std::nullopt)
      : NumericalError(what, component), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};
class SeriesDivergence : public NumericalError {
  using NumericalError::NumericalError;
};

/// Rethrows `e` with the component label prefixed to the message.
[[noreturn]] void rethrow_with_component(const Error& e, int component);

}  // namespace biprab
