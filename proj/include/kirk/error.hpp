#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kirk {

// Malformed or out-of-range input (bad index, bad sequence, bad file).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands living in different rings Λ_i (arity or excluded index differ).
class ArityMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InvalidInput(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class MalformedDiagram : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Milnor's iteration did not converge to a consistent meridian assignment.
class NonStabilizing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoefficientOverflow : public std::overflow_error {
 public:
  CoefficientOverflow() : std::overflow_error("integer coefficient overflow") {}
};

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

}  // namespace kirk
