#pragma once

#include <stdexcept>
#include <string>

namespace grasshopper {

/// Malformed or out-of-contract input (duplicate jumps, non-decreasing
/// partitions, composite "primes", ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap fired. `cap()` names the cap so callers can
/// report which limit to raise.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

/// An instance within the proven size bound came back blocked.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal cross-check failed (e.g. an exact division left a remainder).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grasshopper
