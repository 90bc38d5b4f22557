#pragma once

#include <cstdint>
#include <string>

#include "charp/errors.hpp"

namespace charp {

// Residue class in [0, p). The characteristic lives in the PrimeField that
// created the element; elements carry no reference to it.
struct FieldElem {
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

bool is_prime(std::uint64_t n);

// The prime field F_p for p < 2^31.
class PrimeField {
 public:
  // Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    std::uint32_t s = a.value + b.value;  // < 2^32 since p < 2^31
    return {s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElem neg(FieldElem a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t exponent) const;
  // Throws ArithmeticError on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  std::string to_string(FieldElem a) const { return std::to_string(a.value); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Field-level helper matching the operation name used throughout the docs.
inline FieldElem field_inverse(const PrimeField& field, FieldElem a) { return field.inv(a); }

}  // namespace charp
