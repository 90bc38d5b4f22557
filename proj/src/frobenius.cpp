#include "charp/frobenius.hpp"

#include <algorithm>

namespace charp {
namespace {

constexpr std::size_t kMaxSplitCandidates = 1 << 14;

MultiPoly var(const RingPtr& ring, std::string_view name) { return MultiPoly::variable(ring, name); }

MultiPoly t_poly(const RingPtr& ring, const UniPoly& u) {
  return MultiPoly::from_univariate(ring, u, ring->require_index(PolyRing::kParameter));
}

// Products of prime powers over a factor list, all monic.
std::vector<UniPoly> monic_divisors(const UniPoly& f) {
  std::vector<UniPoly> out{UniPoly::one(f.field())};
  for (const auto& [g, m] : uni_factor(f).factors) {
    const std::size_t n = out.size();
    UniPoly power = g;
    for (unsigned k = 1; k <= m; ++k) {
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
      power *= g;
    }
    if (out.size() > kMaxSplitCandidates) return {};
  }
  return out;
}

void require_split(const Hypersurface& f) {
  if (!f.split()) throw PreconditionError("hypersurface has no split form");
}

}  // namespace

RingPtr standard_ring(std::uint32_t p) { return PolyRing::make(p, {"t", "x", "y"}); }

Hypersurface::Hypersurface(const MultiPoly& f) : f_(f.in_ring(standard_ring(f.field().characteristic()))) {
  if (f_.is_zero()) throw PreconditionError("hypersurface equation must be nonzero");
}

Hypersurface::Hypersurface(const MultiPoly& f, std::vector<SplitFactor> split) : Hypersurface(f) {
  const RingPtr& ring = f_.ring();
  MultiPoly product = MultiPoly::constant(ring, 1);
  for (const auto& s : split) {
    if (s.multiplicity == 0) throw PreconditionError("split multiplicity must be positive");
    product = product * s.form.to_poly(ring).pow(s.multiplicity);
  }
  if (!(product == f_)) throw PreconditionError("split form does not multiply out to F");
  for (std::size_t i = 0; i < split.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const UniPoly det = split[i].form.x_coeff * split[j].form.y_coeff - split[j].form.x_coeff * split[i].form.y_coeff;
      if (det.is_zero()) throw PreconditionError("split form has proportional linear factors");
    }
  }
  split_ = std::move(split);
}

Hypersurface Hypersurface::four_lines(std::uint32_t p) {
  const RingPtr ring = standard_ring(p);
  const PrimeField& k = ring->field();
  const MultiPoly x = var(ring, "x"), y = var(ring, "y"), t = var(ring, "t");
  const MultiPoly f = x * y * (x - y) * (x - t * y);
  auto form = [&](std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> b) {
    return SplitFactor{LinearForm{UniPoly::from_ints(k, a), UniPoly::from_ints(k, b)}, 1};
  };
  return Hypersurface(f, {form({1}, {}), form({}, {1}), form({1}, {-1}), form({1}, {0, -1})});
}

std::optional<std::vector<SplitFactor>> split_binary_form(const MultiPoly& input) {
  const RingPtr ring = standard_ring(input.field().characteristic());
  const PrimeField& field = ring->field();
  const MultiPoly f = input.in_ring(ring);
  if (f.is_zero()) return std::nullopt;
  const std::size_t t = ring->require_index("t"), xi = ring->require_index("x"), yi = ring->require_index("y");
  const std::uint32_t d = f.terms().front().mono[xi] + f.terms().front().mono[yi];
  for (const auto& term : f.terms()) {
    if (term.mono[xi] + term.mono[yi] != d) return std::nullopt;
  }
  const UniPoly zero(field), one = UniPoly::one(field);

  std::vector<SplitFactor> split;
  MultiPoly rest = f;
  auto strip = [&](const LinearForm& form) {
    const MultiPoly l = form.to_poly(ring);
    unsigned mult = 0;
    while (true) {
      try {
        MultiPoly q = divide_exact(rest, l);
        rest = std::move(q);
        ++mult;
      } catch (const ArithmeticError&) {
        break;
      }
    }
    if (mult > 0) split.push_back({form, mult});
  };
  strip({one, zero});
  strip({zero, one});

  // coefficient of x^i y^(deg - i) in rest, as a polynomial in t
  auto coeff_of = [&](std::uint32_t i, std::uint32_t deg) {
    std::vector<FieldElem> c;
    for (const auto& term : rest.terms()) {
      if (term.mono[xi] != i || term.mono[yi] != deg - i) continue;
      const std::uint32_t k = term.mono[t];
      if (c.size() <= k) c.resize(k + 1);
      c[k] = term.coeff;
    }
    return UniPoly(field, std::move(c));
  };

  std::uint32_t deg = rest.terms().front().mono[xi] + rest.terms().front().mono[yi];
  if (deg > 0) {
    // Any factor a x + b y now has a, b != 0, a | c_top, b | c_bottom.
    const auto as = monic_divisors(coeff_of(deg, deg));
    const auto bs = monic_divisors(coeff_of(0, deg));
    if (as.empty() || bs.empty() || as.size() * bs.size() * (field.characteristic() - 1) > kMaxSplitCandidates) {
      return std::nullopt;
    }
    for (const auto& a : as) {
      for (const auto& b : bs) {
        for (std::uint32_t s = 1; s < field.characteristic(); ++s) {
          if (deg == 0) break;
          LinearForm form{a, b.scale(FieldElem{s})};
          if (!uni_gcd(form.x_coeff, form.y_coeff).is_one()) continue;
          strip(form);
          deg = rest.terms().front().mono[xi] + rest.terms().front().mono[yi];
        }
      }
    }
    if (deg > 0) return std::nullopt;
  }
  // rest is now a polynomial c(t); fold it into a factor of multiplicity 1.
  const UniPoly content = *rest.to_univariate(t);
  if (content.is_one()) return split;
  for (auto& s : split) {
    if (s.multiplicity != 1) continue;
    s.form.x_coeff *= content;
    s.form.y_coeff *= content;
    return split;
  }
  return std::nullopt;
}

FrobeniusIdeal frobenius_ideal(const Hypersurface& f, unsigned e) {
  const std::uint32_t p = f.characteristic();
  const std::uint64_t q = prime_power(p, e);
  const RingPtr& ring = f.ring();
  const auto qq = static_cast<std::uint32_t>(q);
  Ideal ideal(ring, {var(ring, "x").frobenius(qq), var(ring, "y").frobenius(qq), f.polynomial()});
  return {p, e, q, std::move(ideal)};
}

MultiPolyMatrix frobenius_matrix(const MultiPolyMatrix& c, std::uint64_t q) {
  MultiPolyMatrix out;
  out.reserve(c.size());
  for (const auto& row : c) {
    std::vector<MultiPoly> r;
    r.reserve(row.size());
    for (const auto& entry : row) {
      if (log_p(q, entry.field().characteristic()) == 0) {
        throw PreconditionError("q must be a positive power of the characteristic");
      }
      r.push_back(entry.frobenius(static_cast<std::uint32_t>(q)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

MultiPoly torsion_witness_g(const RingPtr& ring, std::uint64_t q) {
  if (q < 2) throw PreconditionError("G needs q >= 2");
  const MultiPoly x = var(ring, "x"), y = var(ring, "y");
  return x * y * (x - y) * y.pow(q - 2);
}

MultiPoly gamma_form(const RingPtr& ring, std::uint64_t q) {
  if (q < 2) throw PreconditionError("gamma needs q >= 2");
  const std::size_t xi = ring->require_index("x"), yi = ring->require_index("y");
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i + 2 <= q; ++i) {
    Monomial m;
    m.set(xi, static_cast<std::uint32_t>(i));
    m.set(yi, static_cast<std::uint32_t>(q - 2 - i));
    terms.push_back({m, ring->field().one()});
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

UniPoly witness_colon(std::uint32_t p, unsigned e) {
  const std::uint64_t q = prime_power(p, e);
  if (q < 3) throw DegenerateCaseError("q = 2 is degenerate: G already lies in I_2");
  const auto fi = frobenius_ideal(Hypersurface::four_lines(p), e);
  return contract_to_t(colon_element(fi.ideal, torsion_witness_g(fi.ideal.ring(), q)));
}

ElementaryDivisors torsion_elementary_divisors(const Hypersurface& f, unsigned e) {
  return smith_normal_form(mult_matrix(f.polynomial(), prime_power(f.characteristic(), e)));
}

AssProbeResult is_associated_maximal(const Ideal& ideal, const UniPoly& pi) {
  if (!is_irreducible(pi)) throw PreconditionError("candidate " + pi.to_string() + " is not irreducible");
  const RingPtr& ring = ideal.ring();
  std::vector<MultiPoly> gens{t_poly(ring, pi.monic())};
  for (const auto& name : ring->variables()) {
    if (name != PolyRing::kParameter) gens.push_back(var(ring, name));
  }
  const Ideal prime(ring, std::move(gens));
  const Ideal colon = colon_ideal(ideal, prime);
  AssProbeResult result{pi.monic(), false, std::nullopt};
  if (ideal_equal(colon, ideal)) return result;
  result.associated = true;
  for (const auto& h : colon.groebner_basis()) {
    if (!member(h, ideal)) {
      result.witness = h.in_ring(ring);
      break;
    }
  }
  return result;
}

std::vector<AssProbeResult> maximal_ass_primes(const Hypersurface& f, unsigned e, std::uint64_t seed) {
  const ElementaryDivisors divisors = torsion_elementary_divisors(f, e);
  const UniPoly d = divisors.largest(f.ring()->field());
  std::vector<AssProbeResult> probes;
  if (d.is_unit()) return probes;
  const FrobeniusIdeal fi = frobenius_ideal(f, e);
  for (const auto& [pi, mult] : uni_factor(d, seed).factors) probes.push_back(is_associated_maximal(fi.ideal, pi));
  return probes;
}

Ideal tight_quotient_ideal(const Hypersurface& f, unsigned e) {
  const std::uint64_t q = prime_power(f.characteristic(), e);
  return variable_power(f.ring(), {"x", "y"}, static_cast<std::uint32_t>(q)) + Ideal(f.ring(), {f.polynomial()});
}

Ideal tight_closure_zero_split(const Hypersurface& f, unsigned e) {
  require_split(f);
  const RingPtr& ring = f.ring();
  const auto q = static_cast<std::uint32_t>(prime_power(f.characteristic(), e));
  const MultiPoly xq = var(ring, "x").frobenius(q), yq = var(ring, "y").frobenius(q);
  std::optional<Ideal> acc;
  for (const auto& s : *f.split()) {
    Ideal component(ring, {s.form.to_poly(ring), xq, yq});
    acc = acc ? intersect(*acc, component) : component;
  }
  if (!acc) return Ideal::unit(ring);
  return *acc;
}

bool ge_check(const Hypersurface& f, unsigned e) {
  const Ideal iq = frobenius_ideal(f, e).ideal;
  return ideal_equal(tight_closure_zero_split(f, e) + iq, tight_quotient_ideal(f, e) + iq);
}

bool lemma11_check(std::uint32_t p, unsigned e) {
  const std::uint64_t q = prime_power(p, e);
  const RingPtr ring = standard_ring(p);
  const MultiPoly x = var(ring, "x"), y = var(ring, "y");
  const Ideal base(ring, {x.pow(q - 1), y.pow(q - 1)});
  const Ideal expected(ring, {y.pow(q - 1), gamma_form(ring, q)});
  return ideal_equal(colon_element(base, x - y), expected);
}

Theorem12Report theorem12_check(std::uint32_t p, unsigned e) {
  const std::uint64_t q = prime_power(p, e);
  if (q < 3) throw DegenerateCaseError("q = 2 is degenerate: G already lies in I_2");
  const auto fi = frobenius_ideal(Hypersurface::four_lines(p), e);
  const RingPtr& ring = fi.ideal.ring();
  const UniPoly tq = tau(p, e);
  const MultiPoly g = torsion_witness_g(ring, q);
  Theorem12Report report;
  report.member_tau_g = member(t_poly(ring, tq) * g, fi.ideal);
  report.not_member_g = !member(g, fi.ideal);
  report.contraction_equals_tau = contract_to_t(colon_element(fi.ideal, g)) == tq.monic();
  return report;
}

bool lemma9_check(const Ideal& ideal, const UniPoly& alpha) {
  if (alpha.is_zero()) throw PreconditionError("alpha must be nonzero");
  const RingPtr& ring = ideal.ring();
  const std::size_t t = ring->require_index(PolyRing::kParameter);
  for (const auto& g : ideal.generators()) {
    if (g.involves(t)) throw PreconditionError("generator " + g.to_string() + " involves t");
  }
  return ideal_equal(colon_element(ideal, t_poly(ring, alpha)), ideal);
}

}  // namespace charp
