#pragma once

#include <stdexcept>
#include <string>

namespace pdmatch {

/// Malformed instance or matching text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver was invoked on an instance outside the class it is exact for.
class ClassMismatch : public std::runtime_error {
 public:
  ClassMismatch(const std::string& algorithm, const std::string& why)
      : std::runtime_error(algorithm + ": " + why), algorithm_(algorithm) {}

  const std::string& algorithm() const { return algorithm_; }

 private:
  std::string algorithm_;
};

/// An enumeration would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matching handed to an operation that requires a valid PD-matching was invalid.
class InvalidMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pdmatch
