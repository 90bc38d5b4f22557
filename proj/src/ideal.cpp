#include "charp/ideal.hpp"

#include <algorithm>
#include <mutex>

namespace charp {

struct Ideal::Cache {
  std::mutex mutex;
  std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<MultiPoly>>>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

const std::vector<MultiPoly>& Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, basis] : cache_->bases) {
      if (o == order) return *basis;
    }
  }
  auto basis = std::make_shared<const std::vector<MultiPoly>>(buchberger(gens_, order));
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, existing] : cache_->bases) {
    if (o == order) return *existing;
  }
  cache_->bases.emplace_back(order, basis);
  return *basis;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return *this;
  return Ideal(target, gens_);
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens = a.gens_;
  for (const auto& g : b.gens_) gens.push_back(g.in_ring(a.ring_));
  return Ideal(a.ring_, std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens;
  for (const auto& f : a.gens_) {
    for (const auto& g : b.gens_) gens.push_back(f * g.in_ring(a.ring_));
  }
  return Ideal(a.ring_, std::move(gens));
}

namespace {

std::string join(const std::vector<MultiPoly>& polys) {
  std::string out = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += polys[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string Ideal::to_string() const { return join(gens_); }

std::string Ideal::basis_string() const { return join(groebner_basis()); }

bool member(const MultiPoly& f, const Ideal& ideal) { return member(f, ideal, ideal.ring()->order()); }

bool member(const MultiPoly& f, const Ideal& ideal, const MonomialOrder& order) {
  if (f.is_zero()) return true;
  const auto& basis = ideal.groebner_basis(order);
  if (basis.empty()) return false;
  return normal_form(f.in_ring(basis.front().ring()), basis).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const Ideal bb = b.in_ring(a.ring());
  return a.groebner_basis() == bb.groebner_basis();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> dropped(ring->nvars(), false);
  for (const auto& name : drop) dropped[ring->require_index(name)] = true;
  std::vector<std::size_t> front, rest;
  for (std::size_t v : ring->order().precedence()) (dropped[v] ? front : rest).push_back(v);
  const auto& basis = ideal.groebner_basis(MonomialOrder::block(front, rest));
  std::vector<MultiPoly> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v : front) free = free && !g.involves(v);
    if (free) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  const std::string tag = ring->fresh_name("w");
  const MonomialOrder order = MonomialOrder::block({ring->nvars()}, ring->order().precedence());
  const RingPtr ext = ring->with_variable(tag, order);
  const MultiPoly w = MultiPoly::variable(ext, tag);
  const MultiPoly one_minus_w = MultiPoly::constant(ext, 1) - w;
  std::vector<MultiPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(w * g.in_ring(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * g.in_ring(ext));
  std::vector<MultiPoly> kept;
  for (const auto& g : buchberger(gens)) {
    if (!g.involves(ring->nvars())) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

Ideal colon_element(const Ideal& ideal, const MultiPoly& f) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  const MultiPoly g = f.in_ring(ring);
  if (g.is_constant()) return ideal;
  const Ideal meet = intersect(ideal, Ideal(ring, {g}));
  std::vector<MultiPoly> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal(ring, std::move(gens));
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal part = colon_element(ideal, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  Ideal current = ideal;
  while (true) {
    Ideal next = colon_ideal(current, by);
    if (ideal_equal(next, current)) return current;
    current = std::move(next);
  }
}

Ideal bracket_power(const Ideal& ideal, std::uint64_t q) {
  const std::uint32_t p = ideal.ring()->field().characteristic();
  if (log_p(q, p) == 0) {
    throw PreconditionError("bracket power exponent " + std::to_string(q) + " is not a positive power of " +
                            std::to_string(p));
  }
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(static_cast<std::uint32_t>(q)));
  return Ideal(ideal.ring(), std::move(gens));
}

UniPoly contract_to_t(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t t = ring->require_index(PolyRing::kParameter);
  std::vector<std::string> drop;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (v != t) drop.push_back(ring->variables()[v]);
  }
  UniPoly g(ring->field());
  const Ideal contraction = eliminate(ideal, drop);
  for (const auto& h : contraction.generators()) g = uni_gcd(g, *h.to_univariate(t));
  return g;
}

Ideal variable_power(const RingPtr& ring, const std::vector<std::string>& vars, std::uint32_t k) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(ring->require_index(v));
  std::vector<MultiPoly> gens;
  // Enumerate exponent vectors of total degree k over idx.
  std::vector<std::uint32_t> e(idx.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == idx.size()) {
      e[pos] = left;
      Monomial m;
      for (std::size_t i = 0; i < idx.size(); ++i) m.set(idx[i], e[i]);
      gens.push_back(MultiPoly::monomial(ring, m, ring->field().one()));
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[pos] = left - a;
      self(self, pos + 1, a);
    }
  };
  if (idx.empty()) return Ideal::unit(ring);
  rec(rec, 0, k);
  return Ideal(ring, std::move(gens));
}

}  // namespace charp
