#include "charp/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace charp {
namespace {

UniPoly t_poly(const PrimeField& field) { return UniPoly::monomial(field, field.one(), 1); }

void squarefree_rec(const UniPoly& f, unsigned scale, std::map<unsigned, UniPoly>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.field().characteristic();
  auto emit = [&](const UniPoly& g, unsigned mult) {
    auto [it, inserted] = out.try_emplace(mult, g);
    if (!inserted) it->second = it->second * g;
  };
  const UniPoly d = f.derivative();
  if (d.is_zero()) {
    // f is a p-th power; in F_p the p-th root just deflates exponents.
    squarefree_rec(f.deflate(p), scale * p, out);
    return;
  }
  UniPoly c = uni_gcd(f, d);
  UniPoly w = f / c;
  for (unsigned i = 1; !w.is_one(); ++i) {
    UniPoly y = uni_gcd(w, c);
    UniPoly fac = w / y;
    if (!fac.is_one()) emit(fac.monic(), i * scale);
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_constant()) squarefree_rec(c.monic().deflate(p), scale * p, out);
}

std::vector<UniPoly> equal_degree_split(const UniPoly& g, unsigned d, std::mt19937_64& rng) {
  if (g.degree() == static_cast<int>(d)) return {g};
  const PrimeField& field = g.field();
  const std::uint32_t p = field.characteristic();
  const int n = g.degree();
  while (true) {
    std::vector<FieldElem> coeffs(n);
    for (auto& c : coeffs) c = {static_cast<std::uint32_t>(rng() % p)};
    UniPoly a(field, std::move(coeffs));
    if (a.is_constant()) continue;
    UniPoly split_poly(field);
    if (p == 2) {
      // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
      UniPoly term = a;
      split_poly = a;
      for (unsigned i = 1; i < d; ++i) {
        term = (term * term) % g;
        split_poly += term;
      }
    } else {
      // a^((p^d-1)/2) computed as norm(a)^((p-1)/2), norm(a) = prod a^(p^i).
      UniPoly frob = a;
      UniPoly norm = a;
      for (unsigned i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = (norm * frob) % g;
      }
      split_poly = powmod(norm, (p - 1) / 2, g) - UniPoly::one(field);
    }
    UniPoly h = uni_gcd(split_poly, g);
    if (h.degree() > 0 && h.degree() < n) {
      auto left = equal_degree_split(h, d, rng);
      auto right = equal_degree_split(g / h, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace

UniPoly FactorList::product(const PrimeField& field) const {
  UniPoly r = UniPoly::constant(field, unit);
  for (const auto& [g, m] : factors) r *= g.pow(m);
  return r;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw ArithmeticError("squarefree decomposition of the zero polynomial");
  std::map<unsigned, UniPoly> parts;
  squarefree_rec(f.monic(), 1, parts);
  std::vector<std::pair<UniPoly, unsigned>> out;
  for (auto& [m, g] : parts) out.emplace_back(std::move(g), m);
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> distinct_degree_decomposition(const UniPoly& f) {
  const PrimeField& field = f.field();
  const std::uint32_t p = field.characteristic();
  const UniPoly t = t_poly(field);
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly rest = f.monic();
  UniPoly h = t % rest;  // t^(p^i) mod rest
  for (unsigned i = 1; rest.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, p, rest);
    UniPoly g = uni_gcd(h - t, rest);
    if (!g.is_one()) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(std::move(g), i);
    }
  }
  if (rest.degree() > 0) {
    const auto d = static_cast<unsigned>(rest.degree());
    out.emplace_back(std::move(rest), d);
  }
  return out;
}

FactorList uni_factor(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ArithmeticError("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  FactorList result{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_decomposition(part)) {
      for (auto& irr : equal_degree_split(block, d, rng)) result.factors.emplace_back(irr.monic(), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return result;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  if (!uni_gcd(f, f.derivative()).is_one()) return false;
  auto ddf = distinct_degree_decomposition(f);
  return ddf.size() == 1 && static_cast<int>(ddf.front().second) == f.degree();
}

}  // namespace charp
