#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "charp/unipoly.hpp"

namespace charp {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'c0ffee'0001ULL;

struct FactorList {
  FieldElem unit;
  // Monic irreducible factors in canonical order with multiplicities.
  std::vector<std::pair<UniPoly, unsigned>> factors;

  // unit * prod factor^multiplicity
  UniPoly product(const PrimeField& field) const;
};

// Squarefree decomposition: pairs (squarefree monic g_i, i) with
// f = lc(f) * prod g_i^i. Input must be nonzero.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

// Distinct-degree decomposition of a monic squarefree polynomial: pairs
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly, unsigned>> distinct_degree_decomposition(const UniPoly& f);

// Complete factorization into monic irreducibles. Equal-degree splitting is
// randomized by `seed`; the result does not depend on it. Throws
// ArithmeticError on the zero polynomial.
FactorList uni_factor(const UniPoly& f, std::uint64_t seed = kDefaultFactorSeed);

// Irreducibility certified by distinct-degree decomposition.
bool is_irreducible(const UniPoly& f);

}  // namespace charp
