#include <gtest/gtest.h>

#include "charp/errors.hpp"
#include "charp/multipoly.hpp"
#include "charp/parser.hpp"
#include "support/oracles.hpp"

namespace charp {
namespace {

MultiPoly P(const std::string& s, const RingPtr& r) { return parse(s, r); }

TEST(Parse, ReducesLiterals) {
  const RingPtr r = PolyRing::make(5);
  EXPECT_EQ(P("x^2 - 2*y", r), P("x^2 + 3*y", r));
  EXPECT_EQ(P("x^2 - 2*y", r).to_string(), "x^2 + 3*y");
  EXPECT_EQ(P("12", r), MultiPoly::constant(r, 2));
}

TEST(Parse, FourLinesExpansion) {
  const RingPtr r = PolyRing::make(3);
  const MultiPoly f = P("x*y*(x-y)*(x-t*y)", r);
  EXPECT_EQ(f, P("x^3*y + 2*(1+t)*x^2*y^2 + t*x*y^3", r));
  EXPECT_EQ(f.size(), 4u);
}

TEST(Parse, FreshmansDream) {
  const RingPtr r = PolyRing::make(2);
  EXPECT_EQ(P("(x+y)^2", r), P("x^2+y^2", r));
  EXPECT_EQ(P("(x+y)^8", PolyRing::make(2)).to_string(), "x^8 + y^8");
}

TEST(Parse, UnaryMinus) {
  const RingPtr r = PolyRing::make(7);
  EXPECT_EQ(P("-x", r), MultiPoly::variable(r, "x").scale({6}));
  EXPECT_EQ(P("-(x+1)", r), P("6*x + 6", r));
  EXPECT_EQ(P("--y", r), P("y", r));
  EXPECT_EQ(P("-x^2", r), P("6*x^2", r));
  EXPECT_EQ(P("x*-y", r), P("6*x*y", r));
}

TEST(Parse, Errors) {
  const RingPtr r = PolyRing::make(3);
  try {
    P("x + z", r);
    FAIL() << "unknown variable accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("ty", r), ParseError);
  EXPECT_THROW(P("t y", r), ParseError);
  EXPECT_THROW(P("x^", r), ParseError);
  EXPECT_THROW(P("(x+y", r), ParseError);
  EXPECT_THROW(P("", r), ParseError);
  EXPECT_THROW(P("x^99999999999", r), ParseError);
  EXPECT_THROW(P("x y", r), ParseError);
}

TEST(Parse, WhitespaceInsignificant) {
  const RingPtr r = PolyRing::make(5);
  EXPECT_EQ(P("  x ^ 2 *\ty+  t ", r), P("x^2*y+t", r));
}

TEST(PrintParse, RoundTripOnRandomPolynomials) {
  testing::Gen gen(31);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    const RingPtr r = PolyRing::make(p);
    for (int i = 0; i < 150; ++i) {
      const MultiPoly f = gen.poly(r, 6, 6);
      EXPECT_EQ(P(f.to_string(), r), f) << f.to_string();
      EXPECT_EQ(P(f.to_string(), r).to_string(), f.to_string());
    }
  }
}

TEST(Multiply, Examples) {
  const RingPtr r2 = PolyRing::make(2);
  EXPECT_TRUE((MultiPoly(r2) * P("x+y", r2)).is_zero());
  EXPECT_EQ(multiply(P("x+y", r2), P("x+y", r2)), P("x^2+y^2", r2));
  const RingPtr r3 = PolyRing::make(3);
  EXPECT_EQ(P("x", r3) * P("x+y", r3), P("x^2+x*y", r3));
}

TEST(Multiply, ContextMismatch) {
  EXPECT_THROW(P("x", PolyRing::make(2)) * P("x", PolyRing::make(3)), ContextError);
  EXPECT_THROW(P("x", PolyRing::make(3)) + P("x", PolyRing::make(3, {"x", "y"})), ContextError);
}

TEST(MultiPoly, ContextsCompareByValue) {
  EXPECT_EQ(P("x+1", PolyRing::make(3)), P("x+1", PolyRing::make(3)));
  EXPECT_NO_THROW(P("x", PolyRing::make(3)) * P("y", PolyRing::make(3)));
}

TEST(MultiPoly, RingAxiomsOnSamples) {
  testing::Gen gen(37);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const RingPtr r = PolyRing::make(p);
    for (int i = 0; i < 100; ++i) {
      const MultiPoly f = gen.poly(r, 4, 5);
      const MultiPoly g = gen.poly(r, 4, 5);
      const MultiPoly h = gen.poly(r, 4, 5);
      EXPECT_EQ((f + g) * h, f * h + g * h);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f + g - g, f);
      EXPECT_TRUE((f - f).is_zero());
      if (!f.is_zero() && !g.is_zero()) {
        EXPECT_EQ((f * g).total_degree(), f.total_degree() + g.total_degree());
      }
    }
  }
}

TEST(MultiPoly, FrobeniusIsRingMap) {
  testing::Gen gen(41);
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = PolyRing::make(p);
    for (int i = 0; i < 40; ++i) {
      const MultiPoly f = gen.poly(r, 3, 4);
      const MultiPoly g = gen.poly(r, 3, 4);
      EXPECT_EQ(f.pow(p), f.frobenius(p));
      EXPECT_EQ((f + g).frobenius(p * p), f.frobenius(p * p) + g.frobenius(p * p));
    }
  }
}

TEST(DivideExact, RecoversFactor) {
  testing::Gen gen(43);
  const RingPtr r = PolyRing::make(5);
  for (int i = 0; i < 60; ++i) {
    const MultiPoly f = gen.poly(r, 3, 4);
    const MultiPoly g = gen.poly(r, 3, 4);
    if (f.is_zero()) continue;
    EXPECT_EQ(divide_exact(f * g, f), g);
  }
  EXPECT_THROW(divide_exact(P("x+1", r), P("x", r)), ArithmeticError);
}

TEST(LeadingTerm, Examples) {
  const RingPtr r = PolyRing::make(3);
  const MultiPoly f = P("x^2*y + x^3", r);
  EXPECT_EQ(f.leading_monomial(), P("x^3", r).leading_monomial());
  EXPECT_EQ(leading_term(f, r->order()).first, P("x^3", r).leading_monomial());
  const auto [m, c] = leading_term(P("2", r), r->order());
  EXPECT_TRUE(m.is_one());
  EXPECT_EQ(c.value, 2u);
  const MonomialOrder block = MonomialOrder::block({1, 2}, {0});
  EXPECT_EQ(leading_term(P("t^5 + x", r), block).first, P("x", r).leading_monomial());
  EXPECT_EQ(leading_term(P("t^5 + x", r), r->order()).first, P("t^5", r).leading_monomial());
  EXPECT_THROW(leading_term(MultiPoly(r), r->order()), ArithmeticError);
}

TEST(MonomialOrder, GrevlexTieBreak) {
  // x^2 z vs x y^2 in grevlex x > y > z: smaller power of the last variable wins
  const RingPtr r = PolyRing::make(3, {"x", "y", "z"});
  const MonomialOrder& o = r->order();
  EXPECT_TRUE(o.less(P("x^2*z", r).leading_monomial(), P("x*y^2", r).leading_monomial()));
  const MonomialOrder lex = MonomialOrder::lex({0, 1, 2});
  EXPECT_TRUE(lex.less(P("x*y^2", r).leading_monomial(), P("x^2*z", r).leading_monomial()));
}

class OrderAxioms : public ::testing::TestWithParam<int> {};

TEST_P(OrderAxioms, HoldOnRandomTriples) {
  const MonomialOrder orders[] = {
      MonomialOrder::lex({1, 2, 0, 3}),
      MonomialOrder::grevlex({1, 2, 0, 3}),
      MonomialOrder::block({1, 2}, {0, 3}),
      MonomialOrder::block({0}, {1, 2, 3}),
  };
  const MonomialOrder& o = orders[GetParam()];
  testing::Gen gen(53 + GetParam());
  const Monomial one;
  for (int i = 0; i < 2000; ++i) {
    const Monomial a = gen.monomial(4, 7);
    const Monomial b = gen.monomial(4, 7);
    const Monomial c = gen.monomial(4, 7);
    const int ab = o.compare(a, b);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(ab, -o.compare(b, a));
    if (ab < 0) {
      EXPECT_LT(o.compare(a * c, b * c), 0);
    }
    if (ab < 0 && o.compare(b, c) < 0) {
      EXPECT_LT(o.compare(a, c), 0);
    }
    EXPECT_LE(o.compare(one, a), 0);
    if (a.divides(b)) {
      EXPECT_LE(o.compare(a, b), 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, OrderAxioms, ::testing::Range(0, 4));

TEST(Monomial, DivisionAndLcm) {
  testing::Gen gen(59);
  for (int i = 0; i < 500; ++i) {
    const Monomial a = gen.monomial(3, 6);
    const Monomial b = gen.monomial(3, 6);
    EXPECT_TRUE(a.divides(a * b));
    EXPECT_EQ((a * b) / a, b);
    EXPECT_TRUE(a.divides(lcm(a, b)));
    EXPECT_TRUE(gcd(a, b).divides(b));
    EXPECT_EQ(lcm(a, b) * gcd(a, b), a * b);
    EXPECT_EQ(a.coprime(b), gcd(a, b).is_one());
  }
}

TEST(LinearSubstitute, Examples) {
  const RingPtr r = PolyRing::make(3);
  const MultiPoly f = P("x^2*y + t*x - y", r);
  EXPECT_EQ(linear_substitute(f, {}), f);
  EXPECT_EQ(linear_substitute(f, {{"x", P("x", r)}, {"y", P("y", r)}}), f);
  EXPECT_EQ(linear_substitute(P("x-y", r), {{"y", P("x-y", r)}}), P("y", r));
  const RingPtr r2 = PolyRing::make(2);
  EXPECT_EQ(linear_substitute(P("x*y", r2), {{"x", P("x+y", r2)}, {"y", P("x-y", r2)}}), P("x^2+y^2", r2));
  EXPECT_EQ(linear_substitute(P("x", r), {{"x", P("(t+1)*x + t^2*y", r)}}), P("(t+1)*x + t^2*y", r));
}

TEST(LinearSubstitute, RejectsBadMaps) {
  const RingPtr r = PolyRing::make(3);
  EXPECT_THROW(linear_substitute(P("x", r), {{"t", P("x", r)}}), PreconditionError);
  EXPECT_THROW(linear_substitute(P("x", r), {{"x", P("x^2", r)}}), PreconditionError);
  EXPECT_THROW(linear_substitute(P("x", r), {{"x", P("x+1", r)}}), PreconditionError);
  EXPECT_THROW(linear_substitute(P("x", r), {{"x", P("x*y", r)}}), PreconditionError);
}

TEST(LinearSubstitute, IsRingHomomorphism) {
  testing::Gen gen(61);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const RingPtr r = PolyRing::make(p);
    const PrimeField& k = r->field();
    for (int i = 0; i < 60; ++i) {
      const LinearForm lx{gen.uni(k, 2), gen.uni(k, 2)};
      const LinearForm ly{gen.uni(k, 2), gen.uni(k, 2)};
      const MultiPoly f = gen.poly(r, 3, 4);
      const MultiPoly g = gen.poly(r, 3, 4);
      auto s = [&](const MultiPoly& h) { return linear_substitute(h, lx, ly); };
      EXPECT_EQ(s(f + g), s(f) + s(g));
      EXPECT_EQ(s(f * g), s(f) * s(g));
      EXPECT_EQ(s(MultiPoly::constant(r, 1)), MultiPoly::constant(r, 1));
      EXPECT_EQ(s(P("t", r)), P("t", r));
    }
  }
}

TEST(PolyRing, Validation) {
  EXPECT_THROW(PolyRing::make(4), PreconditionError);
  EXPECT_THROW(PolyRing::make(3, {"x", "x"}), ContextError);
  EXPECT_THROW(PolyRing::make(3, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}), ContextError);
  const RingPtr r = PolyRing::make(3);
  EXPECT_EQ(r->fresh_name("w"), "w");
  EXPECT_EQ(r->with_variable("w", MonomialOrder::grevlex({1, 2, 0, 3}))->fresh_name("w"), "w0");
}

TEST(MultiPoly, InRingMapsByName) {
  const RingPtr a = PolyRing::make(3);
  const RingPtr b = PolyRing::make(3, {"y", "x", "t", "w"});
  const MultiPoly f = P("x^2 + t*y", a);
  EXPECT_EQ(f.in_ring(b), P("x^2 + t*y", b));
  EXPECT_EQ(f.in_ring(b).in_ring(a), f);
  EXPECT_THROW(P("w", b).in_ring(a), ContextError);
}

TEST(MultiPoly, UnivariateConversion) {
  const RingPtr r = PolyRing::make(5);
  const auto u = P("t^3 + 2*t", r).to_univariate(0);
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(u->to_string(), "t^3 + 2*t");
  EXPECT_FALSE(P("t*x", r).to_univariate(0).has_value());
  EXPECT_EQ(MultiPoly::from_univariate(r, *u, 0), P("t^3 + 2*t", r));
}

}  // namespace
}  // namespace charp
