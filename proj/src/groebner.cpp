#include "charp/groebner.hpp"

#include <algorithm>
#include <mutex>

namespace charp {
namespace {

std::mutex g_listener_mutex;
BasisListener g_listener;

void notify(const std::vector<MultiPoly>& basis) {
  std::lock_guard lock(g_listener_mutex);
  if (g_listener) g_listener(basis);
}

// Full reduction of f by the polynomials in `divisors`. The working
// polynomial is kept in ascending order so the leading term pops off the
// back in constant time.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly* const> divisors) {
  const RingPtr& ring = f.ring();
  const MonomialOrder& order = ring->order();
  const PrimeField& field = ring->field();

  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());
  std::vector<Term> scratch;
  std::vector<Term> remainder;  // descending

  while (!work.empty()) {
    const Term lead = work.back();
    const MultiPoly* hit = nullptr;
    for (const MultiPoly* g : divisors) {
      if (g->leading_monomial().divides(lead.mono)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      remainder.push_back(lead);
      work.pop_back();
      continue;
    }
    const Monomial shift = lead.mono / hit->leading_monomial();
    const FieldElem c = field.neg(field.div(lead.coeff, hit->leading_coeff()));
    // work += c * shift * hit, both ascending; the leading terms cancel.
    const auto& gt = hit->terms();
    scratch.clear();
    scratch.reserve(work.size() + gt.size());
    std::size_t a = 0;
    std::size_t b = gt.size();  // walk g from its smallest term
    while (a < work.size() || b > 0) {
      if (b == 0) {
        scratch.insert(scratch.end(), work.begin() + static_cast<std::ptrdiff_t>(a), work.end());
        break;
      }
      const Monomial gm = gt[b - 1].mono * shift;
      const int cmp = a == work.size() ? 1 : order.compare(work[a].mono, gm);
      if (cmp < 0) {
        scratch.push_back(work[a++]);
      } else if (cmp > 0) {
        scratch.push_back({gm, field.mul(c, gt[b - 1].coeff)});
        --b;
      } else {
        const FieldElem v = field.add(work[a].coeff, field.mul(c, gt[b - 1].coeff));
        if (!v.is_zero()) scratch.push_back({gm, v});
        ++a;
        --b;
      }
    }
    std::swap(work, scratch);
  }
  return MultiPoly::from_terms(ring, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerEngine {
 public:
  explicit BuchbergerEngine(RingPtr ring) : ring_(std::move(ring)), order_(ring_->order()) {}

  std::vector<MultiPoly> run(std::vector<MultiPoly> gens) {
    std::erase_if(gens, [](const MultiPoly& g) { return g.is_zero(); });
    std::sort(gens.begin(), gens.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    for (const auto& g : gens) {
      if (add(reduce(g, active_divisors()))) return unit_basis();
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        const int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
      });
      const Pair pair = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      MultiPoly s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      if (add(reduce(s, active_divisors()))) return unit_basis();
    }
    return interreduce();
  }

 private:
  std::vector<const MultiPoly*> active_divisors() const {
    std::vector<const MultiPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Adds a reduced polynomial; returns true when it is a nonzero constant.
  bool add(MultiPoly h) {
    if (h.is_zero()) return false;
    if (h.is_constant()) return true;
    polys_.push_back(h.monic());
    active_.push_back(false);
    update(polys_.size() - 1);
    return false;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial hm = polys_[h].leading_monomial();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) fresh.push_back({g, h, lcm(polys_[g].leading_monomial(), hm)});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      bool keep = polys_[p.i].leading_monomial().coprime(hm);
      if (!keep) {
        keep = std::none_of(fresh.begin() + static_cast<std::ptrdiff_t>(k) + 1, fresh.end(),
                            [&](const Pair& o) { return o.lcm.divides(p.lcm); }) &&
               std::none_of(kept.begin(), kept.end(), [&](const Pair& o) { return o.lcm.divides(p.lcm); });
      }
      if (keep) kept.push_back(p);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return polys_[p.i].leading_monomial().coprime(hm); });
    // Chain criterion on the pairs already queued.
    std::erase_if(pairs_, [&](const Pair& p) {
      return hm.divides(p.lcm) && !(lcm(polys_[p.i].leading_monomial(), hm) == p.lcm) &&
             !(lcm(polys_[p.j].leading_monomial(), hm) == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && hm.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    active_[h] = true;
  }

  std::vector<MultiPoly> unit_basis() const {
    std::vector<MultiPoly> basis{MultiPoly::constant(ring_, 1)};
    return basis;
  }

  std::vector<MultiPoly> interreduce() const {
    std::vector<MultiPoly> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<MultiPoly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const MultiPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      // Leading monomials are pairwise non-dividing, so only tails change.
      const Term& lead = minimal[k].leading_term();
      MultiPoly tail = minimal[k] - MultiPoly::monomial(ring_, lead.mono, lead.coeff);
      reduced.push_back(MultiPoly::monomial(ring_, lead.mono, lead.coeff) + reduce(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis) {
  std::vector<const MultiPoly*> divisors;
  for (const auto& g : basis) {
    if (g.is_zero()) throw PreconditionError("normal_form: zero polynomial in basis");
    if (!same_ring(g.ring(), f.ring())) throw ContextError("normal_form: basis from a different ring");
    divisors.push_back(&g);
  }
  return reduce(f, divisors);
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
  if (order == f.ring()->order()) return normal_form(f, basis);
  RingPtr ordered = f.ring()->with_order(order);
  std::vector<MultiPoly> converted;
  converted.reserve(basis.size());
  for (const auto& g : basis) converted.push_back(g.in_ring(ordered));
  return normal_form(f.in_ring(ordered), converted).in_ring(f.ring());
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  const Monomial l = lcm(a.mono, b.mono);
  const PrimeField& field = f.field();
  MultiPoly s = f.mul_term(l / a.mono, field.inv(a.coeff));
  s.sub_scaled(g, l / b.mono, field.inv(b.coeff));
  return s;
}

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw ContextError("buchberger: generators from different rings");
  }
  auto basis = BuchbergerEngine(ring).run(std::vector<MultiPoly>(gens.begin(), gens.end()));
  notify(basis);
  return basis;
}

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order) {
  if (gens.empty()) return {};
  RingPtr ordered = gens.front().ring()->with_order(order);
  std::vector<MultiPoly> converted;
  converted.reserve(gens.size());
  for (const auto& g : gens) converted.push_back(g.in_ring(ordered));
  return buchberger(converted);
}

bool is_groebner_basis(std::span<const MultiPoly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

void set_basis_listener(BasisListener listener) {
  std::lock_guard lock(g_listener_mutex);
  g_listener = std::move(listener);
}

}  // namespace charp
