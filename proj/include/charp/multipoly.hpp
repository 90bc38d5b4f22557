#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charp/field.hpp"
#include "charp/monomial.hpp"
#include "charp/unipoly.hpp"

namespace charp {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// F_p[v_1, ..., v_n] with an active monomial order. Rings are compared by
// value; polynomials from equal rings interoperate.
class PolyRing {
 public:
  // Name of the coefficient variable of A = F_p[t].
  static constexpr std::string_view kParameter = "t";

  PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order);

  // Default order: grevlex, variables ranked in list order except that the
  // parameter t (if present) is ranked last. For t,x,y this is x > y > t.
  static RingPtr make(std::uint32_t p, std::vector<std::string> vars = {"t", "x", "y"});
  static RingPtr make(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order);
  static MonomialOrder default_order(const std::vector<std::string>& vars);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws ContextError for unknown names.
  std::size_t require_index(std::string_view name) const;
  std::optional<std::size_t> parameter_index() const { return index_of(kParameter); }

  RingPtr with_order(MonomialOrder order) const;
  // Appends a variable; the caller supplies the order of the bigger ring.
  RingPtr with_variable(std::string name, MonomialOrder order) const;
  // A variable name not already in use, derived from `stem`.
  std::string fresh_name(std::string stem) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  FieldElem coeff;
};

// Sparse polynomial. Terms are stored strictly descending in the ring's
// order with nonzero coefficients, so terms().front() is the leading term.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
  static MultiPoly constant(RingPtr ring, std::int64_t c);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, FieldElem c);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  // u(var) for a univariate polynomial u.
  static MultiPoly from_univariate(RingPtr ring, const UniPoly& u, std::size_t var);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Throw ArithmeticError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  FieldElem leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  // Coefficient of a monomial (zero if absent).
  FieldElem coeff(const Monomial& m) const;

  MultiPoly monic() const;
  MultiPoly scale(FieldElem c) const;
  MultiPoly mul_term(const Monomial& m, FieldElem c) const;
  MultiPoly pow(std::uint64_t k) const;
  // g^q computed as sum c * m^q, valid when q is a power of p.
  MultiPoly frobenius(std::uint32_t q) const;

  // this -= c * m * g, in place; g must come from the same ring.
  void sub_scaled(const MultiPoly& g, const Monomial& m, FieldElem c);

  // Same polynomial viewed in `target`, matching variables by name. Throws
  // ContextError if a variable that occurs is missing from `target`.
  MultiPoly in_ring(const RingPtr& target) const;

  // Polynomial in the single variable `var`, or nullopt if others occur.
  std::optional<UniPoly> to_univariate(std::size_t var) const;

  // Terms descending in the ring order, e.g. "x^3*y + 2*t*x^2*y^2".
  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  MultiPoly combine(const MultiPoly& other, bool subtract) const;
  void check_ring(const MultiPoly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Exact product; throws ContextError when the rings differ.
MultiPoly multiply(const MultiPoly& f, const MultiPoly& g);

// Maximal term of f under `order`; throws ArithmeticError on zero.
std::pair<Monomial, FieldElem> leading_term(const MultiPoly& f, const MonomialOrder& order);

// Quotient g / f; throws ArithmeticError when f does not divide g.
MultiPoly divide_exact(const MultiPoly& g, const MultiPoly& f);

// a*x + b*y with a, b in F_p[t].
struct LinearForm {
  UniPoly x_coeff;
  UniPoly y_coeff;

  MultiPoly to_poly(const RingPtr& ring) const;
};

// Replaces variables by linear forms in x, y whose coefficients lie in
// F_p[t]; variables not in the map are left alone. Throws PreconditionError
// if t is a target or an image is not such a linear form.
MultiPoly linear_substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& images);
MultiPoly linear_substitute(const MultiPoly& f, const LinearForm& x_image, const LinearForm& y_image);

}  // namespace charp
