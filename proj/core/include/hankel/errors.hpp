#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Raised when an argument is outside the domain of the mathematical object (|z| > 1, t >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed or inconsistent arguments (bad space parameters, empty grids, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the input violates a structural precondition of a formula
/// (e.g. coefficient formulas that require non-negative non-increasing coefficients).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a truncated expansion is too short to represent the requested object.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Literal parse failure; `position` is the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hankel
