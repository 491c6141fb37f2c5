#pragma once

#include <stdexcept>
#include <string>

namespace sqent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the physical or mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Squeezed-bath parameters violating |M|^2 <= N(N+1).
class UnphysicalBathError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Matrix lacks the X (block) structure required by a closed-form routine.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Generator null space is degenerate within tolerance.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent request, e.g. an engine that cannot serve the chosen variant.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Adaptive integrator could not make progress.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double last_good_time)
      : Error(what), last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace sqent
