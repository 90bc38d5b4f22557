#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

// Division by zero, non-invertible elements, inexact division.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands bound to different rings, unknown variables, too many variables.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller violated an operation's precondition (bad q, reducible prime, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs on which a check has no mathematical content (q = 2 for the
// torsion witness, for example).
class DegenerateCaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace charp
