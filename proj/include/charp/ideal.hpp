#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/multipoly.hpp"
#include "charp/unipoly.hpp"

namespace charp {

// Finitely generated ideal. Generators are immutable; reduced Groebner
// bases are computed lazily and cached per monomial order. Copies share the
// cache. Concurrent first use may compute a basis twice; both runs produce
// the same reduced basis and either may be kept.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<MultiPoly> gens = {});

  static Ideal unit(RingPtr ring) { return Ideal(ring, {MultiPoly::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  // Reduced basis in the ring's own order.
  const std::vector<MultiPoly>& groebner_basis() const { return groebner_basis(ring_->order()); }
  // Reduced basis under `order`; its polynomials live in ring()->with_order(order).
  const std::vector<MultiPoly>& groebner_basis(const MonomialOrder& order) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  // Generators re-expressed in another ring with the same variables.
  Ideal in_ring(const RingPtr& target) const;

  friend Ideal operator+(const Ideal& a, const Ideal& b);
  friend Ideal operator*(const Ideal& a, const Ideal& b);

  // "(g1, g2, ...)" over the generators.
  std::string to_string() const;
  // Same, over the reduced basis.
  std::string basis_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

bool member(const MultiPoly& f, const Ideal& ideal);
bool member(const MultiPoly& f, const Ideal& ideal, const MonomialOrder& order);

// Reduced bases coincide (b is moved into a's ring first).
bool ideal_equal(const Ideal& a, const Ideal& b);

// I intersected with the subring on the remaining variables, via a block
// order with the dropped variables in front.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

// I ∩ J by eliminating a tag variable w from w*I + (1-w)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : f) = (I ∩ (f)) / f. Throws PreconditionError for f = 0.
Ideal colon_element(const Ideal& ideal, const MultiPoly& f);

// (I : J) as the intersection of (I : g) over generators g of J.
Ideal colon_ideal(const Ideal& ideal, const Ideal& by);

// (I : J^inf), iterating colon_ideal until the ideal stabilizes.
Ideal saturate(const Ideal& ideal, const Ideal& by);

// Ideal of q-th powers of the generators. q must be a positive power of
// the characteristic (PreconditionError otherwise).
Ideal bracket_power(const Ideal& ideal, std::uint64_t q);

// Monic generator of I ∩ F_p[t] (zero when the contraction is zero).
UniPoly contract_to_t(const Ideal& ideal);

// All monomials of degree k in the named variables, e.g. (x, y)^k.
Ideal variable_power(const RingPtr& ring, const std::vector<std::string>& vars, std::uint32_t k);

}  // namespace charp
