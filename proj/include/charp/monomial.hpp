#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charp {

// Upper bound on ring variables; the tag variable used for intersections
// counts against it.
inline constexpr std::size_t kMaxVars = 8;

// Exponent vector. Slots past the ring's variable count stay zero, so
// monomials from the same ring compare and multiply without the count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }
  Monomial pow(std::uint32_t k) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] * k;
    r.degree_ = degree_ * k;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    r.degree_ += r.exps_[i];
  }
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
    r.degree_ += r.exps_[i];
  }
  return r;
}

enum class OrderKind { lex, grevlex, block };

// A monomial order is a sequence of blocks of variables. Monomials are
// compared block by block; inside a block variables are ranked by
// precedence (first = largest) and compared lex or grevlex.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::vector<std::size_t> precedence);
  static MonomialOrder grevlex(std::vector<std::size_t> precedence);
  // Elimination order: every monomial involving `front` beats every
  // monomial free of it. Both blocks are grevlex.
  static MonomialOrder block(std::vector<std::size_t> front, std::vector<std::size_t> rest);

  OrderKind kind() const { return kind_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
      int c = blk.lex ? compare_lex(blk, a, b) : compare_grevlex(blk, a, b);
      if (c != 0) return c;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // All variable indices in precedence order, block by block.
  std::vector<std::size_t> precedence() const;
  // Variables of the leading block of a block order (empty otherwise).
  std::vector<std::size_t> front_block() const;

  std::string describe(std::span<const std::string> names) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  struct Block {
    bool lex = false;
    std::vector<std::size_t> vars;
    friend bool operator==(const Block&, const Block&) = default;
  };

  static int compare_lex(const Block& blk, const Monomial& a, const Monomial& b) {
    for (std::size_t v : blk.vars) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  static int compare_grevlex(const Block& blk, const Monomial& a, const Monomial& b) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t v : blk.vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<Block> blocks_;
};

}  // namespace charp
