#pragma once

#include <stdexcept>
#include <string>

namespace cicrit {

/// An input violated an operation's precondition (bad rank, Δ of the wrong sign, ...).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The stored invariant tables have no entry for the requested variety.
class DataUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interval comparison against a transcendental constant could not be decided.
class InconclusiveComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cicrit
