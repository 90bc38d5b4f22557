#include <gtest/gtest.h>

#include "charp/errors.hpp"
#include "charp/field.hpp"
#include "charp/unipoly.hpp"
#include "support/oracles.hpp"

namespace charp {
namespace {

UniPoly U(std::uint32_t p, std::initializer_list<std::int64_t> c) { return UniPoly::from_ints(PrimeField(p), c); }

TEST(PrimeField, RejectsNonPrimes) {
  for (std::uint32_t n : {0u, 1u, 4u, 9u, 15u, 4294967291u}) EXPECT_THROW(PrimeField{n}, PreconditionError) << n;
  EXPECT_NO_THROW(PrimeField{2147483647u});
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const PrimeField f(GetParam());
  const std::uint32_t p = GetParam();
  for (std::uint32_t a = 0; a < p; ++a) {
    const FieldElem x{a};
    EXPECT_EQ(f.add(x, f.zero()), x);
    EXPECT_EQ(f.mul(x, f.one()), x);
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    if (a != 0) {
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    }
    for (std::uint32_t b = 0; b < p; ++b) {
      const FieldElem y{b};
      EXPECT_EQ(f.add(x, y).value, (a + b) % p);
      EXPECT_EQ(f.mul(x, y).value, (a * b) % p);
      EXPECT_EQ(f.add(x, y), f.add(y, x));
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      EXPECT_EQ(f.sub(f.add(x, y), y), x);
      for (std::uint32_t c = 0; c < p; ++c) {
        const FieldElem z{c};
        EXPECT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FieldAxioms, ::testing::Values(2u, 3u, 5u, 7u));

TEST(FieldInverse, Examples) {
  EXPECT_EQ(field_inverse(PrimeField(7), {1}).value, 1u);
  EXPECT_EQ(field_inverse(PrimeField(7), {3}).value, 5u);
  EXPECT_EQ(field_inverse(PrimeField(2), {1}).value, 1u);
  EXPECT_THROW(field_inverse(PrimeField(7), {0}), ArithmeticError);
}

TEST(FieldInverse, LargePrime) {
  const PrimeField f(2147483647u);
  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a = gen.nonzero(f);
    EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
  }
}

TEST(UniPoly, CanonicalForm) {
  EXPECT_TRUE(U(5, {0, 0, 0}).is_zero());
  EXPECT_EQ(U(5, {1, 2, 5}).degree(), 1);
  EXPECT_EQ(U(5, {-1}).coeff(0).value, 4u);
  EXPECT_EQ(UniPoly(PrimeField(5)).degree(), -1);
}

TEST(UniPoly, Printing) {
  EXPECT_EQ(U(5, {1, 2, 0, 1}).to_string(), "t^3 + 2*t + 1");
  EXPECT_EQ(U(3, {}).to_string(), "0");
  EXPECT_EQ(U(3, {2}).to_string(), "2");
  EXPECT_EQ(U(3, {0, 1}).to_string(), "t");
}

TEST(UniPoly, DivisionAlgorithm) {
  testing::Gen gen(3);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const PrimeField f(p);
    for (int i = 0; i < 100; ++i) {
      const UniPoly a = gen.uni(f, 9);
      const UniPoly b = gen.uni_nonzero(f, 5);
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
  EXPECT_THROW(U(3, {1, 1}) / UniPoly(PrimeField(3)), ArithmeticError);
}

TEST(UniPoly, NoZeroDivisors) {
  testing::Gen gen(5);
  const PrimeField f(3);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = gen.uni_nonzero(f, 6);
    const UniPoly b = gen.uni_nonzero(f, 6);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(UniGcd, Examples) {
  EXPECT_EQ(uni_gcd(U(5, {-1, 0, 1}), U(5, {-1, 1})), U(5, {-1, 1}));
  EXPECT_EQ(uni_gcd(U(2, {1, 0, 1}), U(2, {1, 1})), U(2, {1, 1}));
  const UniPoly f = U(3, {1, 0, 2});
  EXPECT_EQ(uni_gcd(f, UniPoly(PrimeField(3))), f.monic());
  EXPECT_TRUE(uni_gcd(UniPoly(PrimeField(3)), UniPoly(PrimeField(3))).is_zero());
}

TEST(UniGcd, ScalesWithCommonFactor) {
  testing::Gen gen(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int i = 0; i < 150; ++i) {
      const UniPoly a = gen.uni(f, 8);
      const UniPoly b = gen.uni(f, 8);
      const UniPoly h = gen.uni_nonzero(f, 8);
      const UniPoly g = uni_gcd(a * h, b * h);
      EXPECT_EQ(g, (h.monic() * uni_gcd(a, b)).monic());
      if (!g.is_zero()) {
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(divides(g, a * h));
        EXPECT_TRUE(divides(g, b * h));
      }
    }
  }
}

TEST(UniGcd, BezoutIdentity) {
  testing::Gen gen(19);
  const PrimeField f(7);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = gen.uni(f, 7);
    const UniPoly b = gen.uni(f, 7);
    const auto x = uni_xgcd(a, b);
    EXPECT_EQ(x.s * a + x.t * b, x.gcd);
    EXPECT_EQ(x.gcd, uni_gcd(a, b));
  }
}

TEST(UniPoly, PowmodMatchesRepeatedMultiplication) {
  testing::Gen gen(23);
  const PrimeField f(3);
  for (int i = 0; i < 50; ++i) {
    const UniPoly a = gen.uni(f, 5);
    const UniPoly m = gen.uni_nonzero(f, 4);
    UniPoly acc = UniPoly::one(f) % m;
    for (unsigned k = 0; k < 13; ++k) acc = (acc * a) % m;
    EXPECT_EQ(powmod(a, 13, m), acc);
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(2, 1), U(2, {1}));
  EXPECT_EQ(tau(3, 1), U(3, {1, 1}));
  EXPECT_EQ(tau(2, 2), U(2, {1, 1, 1}));
  EXPECT_EQ(tau(5, 2).degree(), 23);
}

TEST(Tau, EvaluatesToMinusOneAtOne) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const PrimeField f(p);
    for (unsigned e = 1; prime_power(p, e) <= 400; ++e) {
      EXPECT_EQ(tau(p, e).evaluate(f.one()), f.neg(f.one())) << p << "^" << e;
    }
  }
}

TEST(Tau, TimesTMinusOne) {
  const PrimeField f(3);
  const UniPoly t_minus_1 = U(3, {-1, 1});
  EXPECT_EQ(tau(3, 2) * t_minus_1, UniPoly::monomial(f, f.one(), 8) - UniPoly::one(f));
}

TEST(PrimePower, Bounds) {
  EXPECT_EQ(prime_power(2, 5), 32u);
  EXPECT_THROW(prime_power(2, 0), PreconditionError);
  EXPECT_THROW(prime_power(2, 40), PreconditionError);
  EXPECT_EQ(log_p(27, 3), 3u);
  EXPECT_EQ(log_p(12, 2), 0u);
  EXPECT_EQ(log_p(1, 2), 0u);
}

TEST(UniPoly, InflateDeflate) {
  const UniPoly a = U(5, {1, 2, 3});
  EXPECT_EQ(a.inflate(5).deflate(5), a);
  EXPECT_THROW(a.deflate(2), ArithmeticError);
}

}  // namespace
}  // namespace charp
