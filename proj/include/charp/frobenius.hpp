#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charp/factor.hpp"
#include "charp/ideal.hpp"
#include "charp/multipoly.hpp"
#include "charp/snf.hpp"

namespace charp {

// F_p[t, x, y] with the default order (grevlex, x > y > t).
RingPtr standard_ring(std::uint32_t p);

struct SplitFactor {
  LinearForm form;
  unsigned multiplicity = 1;
};

// F in F_p[t][x, y], optionally with a factorization into linear forms
// a_k x + b_k y (a_k, b_k in F_p[t]).
class Hypersurface {
 public:
  // F is moved into standard_ring(p); it may only involve t, x, y.
  explicit Hypersurface(const MultiPoly& f);
  // Throws PreconditionError unless prod l_k^r_k == F exactly and the
  // forms are pairwise non-proportional.
  Hypersurface(const MultiPoly& f, std::vector<SplitFactor> split);

  // x*y*(x-y)*(x-t*y) with its split form.
  static Hypersurface four_lines(std::uint32_t p);

  const MultiPoly& polynomial() const { return f_; }
  const RingPtr& ring() const { return f_.ring(); }
  std::uint32_t characteristic() const { return f_.field().characteristic(); }
  const std::optional<std::vector<SplitFactor>>& split() const { return split_; }

 private:
  MultiPoly f_;
  std::optional<std::vector<SplitFactor>> split_;
};

// Factors a binary form in x, y over F_p[t] into linear forms by a
// rational-root search over divisors of the extreme coefficients.
// nullopt if F is not homogeneous in x, y or has no such factorization.
std::optional<std::vector<SplitFactor>> split_binary_form(const MultiPoly& f);

// I_q = (x^q, y^q, F), the defining ideal of F^e(M_F) = R/(x^q, y^q, F).
struct FrobeniusIdeal {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  Ideal ideal;
};

FrobeniusIdeal frobenius_ideal(const Hypersurface& f, unsigned e);

using MultiPolyMatrix = std::vector<std::vector<MultiPoly>>;

// Entrywise q-th power: the presentation of F^e(M) from one of M.
MultiPolyMatrix frobenius_matrix(const MultiPolyMatrix& c, std::uint64_t q);

// G = x*y*(x-y)*y^(q-2) and gamma = sum_{i=0}^{q-2} x^i y^(q-2-i).
MultiPoly torsion_witness_g(const RingPtr& ring, std::uint64_t q);
MultiPoly gamma_form(const RingPtr& ring, std::uint64_t q);

// Monic generator of ((x^q, y^q, F) : G) ∩ F_p[t] for the four-line F.
// Throws DegenerateCaseError for q < 3.
UniPoly witness_colon(std::uint32_t p, unsigned e);

// Invariant factors of F^e(M_F) as an F_p[t]-module, via the
// multiplication-by-F presentation.
ElementaryDivisors torsion_elementary_divisors(const Hypersurface& f, unsigned e);

struct AssProbeResult {
  UniPoly prime;  // pi; the candidate is (pi, x, y)
  bool associated = false;
  std::optional<MultiPoly> witness;
};

// Decides whether P = (pi, x, y) is associated to R/I. P is maximal, so
// (I : P) != I exactly when P is associated: for h in (I : P) \ I the proper
// ideal (I : h) contains P and therefore equals it. Throws
// PreconditionError when pi is not irreducible.
AssProbeResult is_associated_maximal(const Ideal& ideal, const UniPoly& pi);

// Probes every irreducible factor of the largest invariant factor of
// F^e(M_F) against I_q.
std::vector<AssProbeResult> maximal_ass_primes(const Hypersurface& f, unsigned e,
                                               std::uint64_t seed = kDefaultFactorSeed);

// (x, y)^q + (F): the ideal with R/it = G^e(M_F) for split F.
Ideal tight_quotient_ideal(const Hypersurface& f, unsigned e);

// J = intersection over k of (l_k) + (x^q, y^q). Requires a split form.
Ideal tight_closure_zero_split(const Hypersurface& f, unsigned e);

// J + I_q == (x, y)^q + I_q.
bool ge_check(const Hypersurface& f, unsigned e);

// ((x^(q-1), y^(q-1)) : (x - y)) == (y^(q-1), gamma).
bool lemma11_check(std::uint32_t p, unsigned e);

struct Theorem12Report {
  bool member_tau_g = false;
  bool not_member_g = false;
  bool contraction_equals_tau = false;

  bool all() const { return member_tau_g && not_member_g && contraction_equals_tau; }
};

// Throws DegenerateCaseError for q < 3.
Theorem12Report theorem12_check(std::uint32_t p, unsigned e);

// (I : alpha) == I for I generated in F_p[x, y]. Throws
// PreconditionError on t-dependent generators or alpha = 0.
bool lemma9_check(const Ideal& ideal, const UniPoly& alpha);

}  // namespace charp
