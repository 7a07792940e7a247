#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primemodes {

/// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation exists but is not defined for the requested mode set.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested tolerance needs a cutoff beyond what the sieve is allowed to reach.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, double best_bound, std::uint64_t max_cutoff)
      : std::runtime_error(what), best_bound_(best_bound), max_cutoff_(max_cutoff) {}

  /// Tail bound achievable at the maximum permitted cutoff.
  double best_bound() const noexcept { return best_bound_; }
  std::uint64_t max_cutoff() const noexcept { return max_cutoff_; }

 private:
  double best_bound_;
  std::uint64_t max_cutoff_;
};

/// Quadrature could not reach its tolerance within the panel budget.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// A mode lies outside the truncation window of a Fock-space computation.
class CutoffError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace primemodes
