#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charp/field.hpp"

namespace charp {

// Dense polynomial in F_p[t], coefficients indexed by degree. The zero
// polynomial has no coefficients; otherwise the top coefficient is nonzero.
class UniPoly {
 public:
  explicit UniPoly(PrimeField field) : field_(field) {}
  UniPoly(PrimeField field, std::vector<FieldElem> coeffs);

  // Coefficients given low degree first, reduced mod p.
  static UniPoly from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs);
  static UniPoly constant(PrimeField field, FieldElem c);
  static UniPoly one(PrimeField field) { return constant(field, field.one()); }
  // c * t^degree
  static UniPoly monomial(PrimeField field, FieldElem c, std::size_t degree);

  const PrimeField& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElem{}; }
  FieldElem leading() const { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }
  std::span<const FieldElem> coefficients() const { return coeffs_; }

  bool is_constant() const { return coeffs_.size() <= 1; }
  // Nonzero constant.
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].value == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().value == 1; }

  UniPoly monic() const;
  UniPoly scale(FieldElem c) const;
  UniPoly derivative() const;
  FieldElem evaluate(FieldElem at) const;
  // f(t^k) and its inverse; the latter requires every exponent divisible by k.
  UniPoly inflate(std::size_t k) const;
  UniPoly deflate(std::size_t k) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other) { return *this = *this * other; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return a.scale(a.field_.neg(a.field_.one())); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  // Euclidean division; throws ArithmeticError when dividing by zero.
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);

  UniPoly pow(std::uint64_t exponent) const;

  // Descending degrees, e.g. "t^3 + 2*t + 1"; "0" for zero.
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  // Degree first, then coefficients from the top; gives canonical factor order.
  friend bool canonical_less(const UniPoly& a, const UniPoly& b);

 private:
  void normalize();

  PrimeField field_;
  std::vector<FieldElem> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};
DivMod divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; uni_gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;
  UniPoly t;    // s*f + t*g == gcd
};
ExtendedGcd uni_xgcd(const UniPoly& f, const UniPoly& g);

// base^exponent mod modulus.
UniPoly powmod(const UniPoly& base, std::uint64_t exponent, const UniPoly& modulus);

bool divides(const UniPoly& d, const UniPoly& f);

// 1 + t + ... + t^(q-2) for q = p^e; q must be at least 2.
UniPoly tau(std::uint32_t p, unsigned e);

// p^e, throwing PreconditionError on e == 0 or overflow past 2^32.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

// Exponent e with q == p^e, or 0 when q is not a positive power of p.
unsigned log_p(std::uint64_t q, std::uint32_t p);

}  // namespace charp
