#pragma once

#include <functional>
#include <span>
#include <vector>

#include "charp/multipoly.hpp"

namespace charp {

// Multivariate division: f minus a combination of `basis`, with no term
// divisible by a leading monomial of the basis. Uses f's ring order; the
// basis must live in the same ring and contain no zero polynomial.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis);
// Division under `order`; the remainder is returned in f's ring.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Reduced Groebner basis (monic, sorted by descending leading monomial)
// under the ring order of the generators. Zero generators are ignored.
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens);
// Same, under `order`; the basis lives in gens' ring re-equipped with it.
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order);

// Checks every S-pair (no criteria) reduces to zero.
bool is_groebner_basis(std::span<const MultiPoly> basis);

// Observer called with every basis buchberger() returns. Intended for
// verification harnesses; pass an empty function to remove it.
using BasisListener = std::function<void(const std::vector<MultiPoly>&)>;
void set_basis_listener(BasisListener listener);

}  // namespace charp
