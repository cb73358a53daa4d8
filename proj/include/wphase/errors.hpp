#pragma once

#include <stdexcept>
#include <string>

namespace wphase {

/// Argument outside the documented evaluation range of a routine.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Pochhammer denominator vanished before a terminating series ended.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result magnitude does not fit in a double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Cancellation in an alternating sum exceeded what the working precision
/// can absorb; the value would not be trustworthy to double precision.
class PrecisionLossError : public OverflowError {
 public:
  using OverflowError::OverflowError;
};

/// Truncated Fock space too small for the requested state.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operands live in Fock spaces of different truncation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wphase
