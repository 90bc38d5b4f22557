#include "charp/unipoly.hpp"

#include <algorithm>
#include <limits>

namespace charp {

UniPoly::UniPoly(PrimeField field, std::vector<FieldElem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.from_int(c.value);
  normalize();
}

UniPoly UniPoly::from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return UniPoly(field, std::move(v));
}

UniPoly UniPoly::constant(PrimeField field, FieldElem c) { return UniPoly(field, {c}); }

UniPoly UniPoly::monomial(PrimeField field, FieldElem c, std::size_t degree) {
  if (c.is_zero()) return UniPoly(field);
  std::vector<FieldElem> v(degree + 1);
  v[degree] = c;
  return UniPoly(field, std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scale(field_.inv(leading()));
}

UniPoly UniPoly::scale(FieldElem c) const {
  if (c.is_zero()) return UniPoly(field_);
  UniPoly r = *this;
  for (auto& a : r.coeffs_) a = field_.mul(a, c);
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_[i - 1] = field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
  }
  r.normalize();
  return r;
}

FieldElem UniPoly::evaluate(FieldElem at) const {
  FieldElem acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

UniPoly UniPoly::inflate(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  UniPoly r(field_);
  r.coeffs_.assign((coeffs_.size() - 1) * k + 1, FieldElem{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * k] = coeffs_[i];
  return r;
}

UniPoly UniPoly::deflate(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  UniPoly r(field_);
  r.coeffs_.assign((coeffs_.size() - 1) / k + 1, FieldElem{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (i % k != 0) throw ArithmeticError("deflate: exponent not divisible by " + std::to_string(k));
    r.coeffs_[i / k] = coeffs_[i];
  }
  r.normalize();
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.field_.characteristic();
  // Accumulate in 64 bits and reduce lazily; each product is < 2^62.
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::uint64_t ai = a.coeffs_[i].value;
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + ai * b.coeffs_[j].value) % p;
    }
  }
  r.coeffs_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.coeffs_[i] = {static_cast<std::uint32_t>(acc[i])};
  r.normalize();
  return r;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const PrimeField& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<FieldElem> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const FieldElem inv_lead = f.inv(bc.back());
  std::vector<FieldElem> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    FieldElem c = f.mul(rem[k], inv_lead);
    quot[k - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, bc[j]));
  }
  rem.resize(db);
  return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly UniPoly::pow(std::uint64_t exponent) const {
  UniPoly result = one(field_);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElem c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c.value);
      continue;
    }
    if (c.value != 1) out += std::to_string(c.value) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd uni_xgcd(const UniPoly& f, const UniPoly& g) {
  const PrimeField& field = f.field();
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::one(field), s1(field);
  UniPoly t0(field), t1 = UniPoly::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElem inv = field.inv(r0.leading());
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

UniPoly powmod(const UniPoly& base, std::uint64_t exponent, const UniPoly& modulus) {
  UniPoly result = UniPoly::one(base.field()) % modulus;
  UniPoly b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent > 0) b = (b * b) % modulus;
  }
  return result;
}

bool divides(const UniPoly& d, const UniPoly& f) {
  if (d.is_zero()) return f.is_zero();
  return (f % d).is_zero();
}

std::uint64_t prime_power(std::uint32_t p, unsigned e) {
  if (e == 0) throw PreconditionError("Frobenius exponent e must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) throw PreconditionError("p^e overflows");
  }
  return q;
}

unsigned log_p(std::uint64_t q, std::uint32_t p) {
  if (q < p || p < 2) return 0;
  unsigned e = 0;
  while (q > 1) {
    if (q % p != 0) return 0;
    q /= p;
    ++e;
  }
  return e;
}

UniPoly tau(std::uint32_t p, unsigned e) {
  PrimeField field(p);
  const std::uint64_t q = prime_power(p, e);
  std::vector<FieldElem> coeffs(q - 1, field.one());
  return UniPoly(field, std::move(coeffs));
}

}  // namespace charp
