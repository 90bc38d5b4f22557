#include "charp/field.hpp"

namespace charp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t exponent) const {
  FieldElem result = one();
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
  }
  return from_int(s0);
}

}  // namespace charp
