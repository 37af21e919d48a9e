// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|x| > 1, |mu| > l, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument within 1e-12 of a pole of the Gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invariant mass below the two-body threshold, or a vanishing flux factor.
class ThresholdError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Scattering angle outside the exclusion window around the Coulomb singularities.
class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Truncation too small or mismatched operand dimensions.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Regularized partial-wave sum whose extrapolation residual exceeds the tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace scatter
