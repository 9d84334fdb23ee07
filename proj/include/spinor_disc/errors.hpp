#pragma once

#include <stdexcept>
#include <string>

namespace spinor_disc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested on (or past) an endpoint of x in [-1, 1].
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// x = -1 corresponds to rho = infinity and has no finite radius.
class InfiniteRadiusError : public BoundaryError {
 public:
  using BoundaryError::BoundaryError;
};

/// A numerical procedure failed to reach its accuracy target.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The terminating coefficient recursion left a nonzero remainder.
class InconsistentRecursionError : public std::runtime_error {
 public:
  InconsistentRecursionError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Invalid command-line or configuration input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spinor_disc
