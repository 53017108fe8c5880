#pragma once

#include <stdexcept>
#include <string>

#include "fo/rational.hpp"

namespace fo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside an operation's domain (subset not in the ground set,
// empty subset where a nonempty one is required, |V| too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested sum-rate below the minimum sum-rate.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, Rational min_sum_rate)
      : Error(what), min_sum_rate_(std::move(min_sum_rate)) {}
  const Rational& min_sum_rate() const { return min_sum_rate_; }

 private:
  Rational min_sum_rate_;
};

// Input too large for an exponential reference routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The fundamental partition is not uniquely determined by the finest-maximizer rule.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A postcondition that holds for valid (submodular / polymatroidal) inputs failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fo
