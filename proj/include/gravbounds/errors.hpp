#pragma once

#include <stdexcept>
#include <string>

namespace gravbounds {

/// Precondition or input-domain violation (bad parameter, mismatched grids, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to reach its target (non-convergence,
/// subdivision exhaustion, step underflow, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Spectral truncation insufficient for the requested tolerance.
class TruncationError : public NumericError {
 public:
  TruncationError(const std::string& what, double tail_mass, int n_modes)
      : NumericError(what), tail_mass(tail_mass), n_modes(n_modes) {}
  double tail_mass;
  int n_modes;
};

}  // namespace gravbounds
