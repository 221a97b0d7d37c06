#include <gtest/gtest.h>

#include "support.hpp"

using namespace critideals;
using testing_support::random_point;
using testing_support::random_polynomial;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

TEST(Monomial, DeglexOrdersByDegreeThenLex) {
  Monomial x1 = Monomial::variable(1);
  Monomial x2 = Monomial::variable(2);
  EXPECT_GT(x1, x2);
  EXPECT_GT(x2 * x2, x1);
  EXPECT_GT(x1 * x2, x2 * x2);
  EXPECT_GT(x1 * x1, x1 * x2);
  EXPECT_TRUE(Monomial().is_one());
}

TEST(Monomial, DivisionAndLcm) {
  Monomial a{{1, 2}, {3, 1}};
  Monomial b{{1, 1}, {2, 1}};
  EXPECT_EQ(lcm(a, b), (Monomial{{1, 2}, {2, 1}, {3, 1}}));
  EXPECT_TRUE(b.divides(lcm(a, b)));
  EXPECT_EQ(lcm(a, b) / b, (Monomial{{1, 1}, {3, 1}}));
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE(Monomial::variable(4).coprime(a));
}

TEST(Polynomial, PrintsCanonicalText) {
  Polynomial p = Polynomial::variable(1) * Polynomial::variable(2) * Polynomial::variable(3) - Polynomial::variable(1) -
                 Polynomial::variable(3);
  EXPECT_EQ(p.to_string(), "x1*x2*x3 - x1 - x3");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial(-3L).to_string(), "-3");
  EXPECT_EQ(P("2*x1^2 + 1").to_string(), "2*x1^2 + 1");
  EXPECT_EQ(P("-x2 + x1").to_string(), "x1 - x2");
}

TEST(Polynomial, ParseRejectsGarbage) {
  EXPECT_THROW(parse_polynomial("x1 +"), ParseError);
  EXPECT_THROW(parse_polynomial("y1"), ParseError);
  EXPECT_THROW(parse_polynomial("x0"), ParseError);
  EXPECT_THROW(parse_polynomial(""), ParseError);
}

TEST(Polynomial, RandomRoundTripThroughText) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_polynomial(rng, 4, 6, 3, 20);
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << p.to_string();
  }
}

// Ring laws and evaluation as a homomorphism, on random inputs.
TEST(Polynomial, RingLawsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Polynomial a = random_polynomial(rng, 4, 5, 2, 9);
    Polynomial b = random_polynomial(rng, 4, 5, 2, 9);
    Polynomial c = random_polynomial(rng, 4, 5, 2, 9);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Polynomial(1L), a);
    auto x = random_point(rng, 4);
    EXPECT_EQ((a * b + c).evaluate(x), a.evaluate(x) * b.evaluate(x) + c.evaluate(x));
  }
}

TEST(Polynomial, SubMulTermMatchesSeparateOperations) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_polynomial(rng, 3, 6, 3, 9);
    Polynomial g = random_polynomial(rng, 3, 6, 3, 9);
    Monomial m{{1, 1}, {3, 2}};
    Polynomial expected = f - g.mul_term(Integer(-5), m);
    f.sub_mul_term(Integer(-5), m, g);
    EXPECT_EQ(f, expected);
  }
}

TEST(Polynomial, NormalizeSignAndCanonicalOrder) {
  EXPECT_EQ(normalize_sign(P("-x1*x2 + 1")), P("x1*x2 - 1"));
  EXPECT_TRUE(normalize_sign(Polynomial()).is_zero());
  EXPECT_EQ(canonical_compare(P("x1"), P("x2")), std::strong_ordering::greater);
  EXPECT_EQ(canonical_compare(P("x1 + 1"), P("x1")), std::strong_ordering::greater);
  EXPECT_THROW((void)Polynomial().leading_term(), std::domain_error);
}

TEST(GeneratorSet, KeepsBasisOrderAndRejectsDuplicates) {
  GeneratorSet g;
  EXPECT_TRUE(g.insert(P("x2")));
  EXPECT_TRUE(g.insert(P("x1*x2 - 1")));
  EXPECT_TRUE(g.insert(P("x1")));
  EXPECT_FALSE(g.insert(P("x1")));
  EXPECT_FALSE(g.insert(Polynomial()));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], P("x1*x2 - 1"));
  EXPECT_EQ(g[1], P("x1"));
  EXPECT_EQ(g[2], P("x2"));
}

TEST(SPolynomial, CancelsLeadingTerms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_polynomial(rng, 3, 4, 2, 9);
    Polynomial g = random_polynomial(rng, 3, 4, 2, 9);
    if (f.is_zero() || g.is_zero()) continue;
    Polynomial s = s_polynomial(f, g);
    Monomial l = lcm(f.leading_power(), g.leading_power());
    if (!s.is_zero()) EXPECT_LT(s.leading_power(), l);
    Polynomial h = gcd_polynomial(f, g);
    EXPECT_EQ(h.leading_power(), l);
    EXPECT_EQ(h.leading_coefficient(), gcd(f.leading_coefficient(), g.leading_coefficient()));
  }
  EXPECT_THROW(s_polynomial(Polynomial(), P("x1")), InputError);
}

TEST(Groebner, IntegerCoefficientExamples) {
  GeneratorSet a = groebner_complete(GeneratorSet{P("2*x1"), P("3*x1")});
  EXPECT_TRUE(reduces_to_zero(P("x1"), a));
  EXPECT_FALSE(reduces_to_zero(P("1"), a));

  GeneratorSet b = groebner_complete(GeneratorSet{P("2"), P("x1")});
  EXPECT_FALSE(b.contains_one());
  EXPECT_FALSE(reduces_to_zero(P("x1 + 1"), b));
  EXPECT_TRUE(reduces_to_zero(P("x1 + 2"), b));

  GeneratorSet c = groebner_complete(GeneratorSet{P("2*x1 + 1"), P("x1")});
  EXPECT_TRUE(c.contains_one());
  EXPECT_EQ(c, GeneratorSet{P("1")});

  GeneratorSet d = groebner_complete(GeneratorSet{P("x1*x2 - 1"), P("x2")});
  EXPECT_TRUE(d.contains_one());
}

// Ideals with a common integer zero: combinations are members, polynomials nonzero there are not.
TEST(Groebner, MembershipAgainstCommonZeroOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> root(-2, 2);
  for (int i = 0; i < 60; ++i) {
    long a = root(rng);
    long b = root(rng);
    Polynomial xa = P("x1") - Polynomial(a);
    Polynomial xb = P("x2") - Polynomial(b);
    GeneratorSet gens{xa * random_polynomial(rng, 2, 2, 1, 3) + xb * random_polynomial(rng, 2, 2, 1, 3),
                      xb * random_polynomial(rng, 2, 2, 1, 3), xa * xa};
    GeneratorSet basis = groebner_complete(gens);
    EXPECT_TRUE(is_groebner_basis(basis));
    Polynomial member;
    for (const Polynomial& g : gens) member += g * random_polynomial(rng, 2, 3, 2, 5);
    EXPECT_TRUE(reduces_to_zero(member, basis)) << member.to_string();
    Polynomial outsider = member + Polynomial(1L);
    EXPECT_FALSE(reduces_to_zero(outsider, basis)) << outsider.to_string();
    EXPECT_TRUE(reduce_fully(member, basis).is_zero());
  }
}

TEST(Groebner, BudgetExhaustionCarriesPartialBasis) {
  CompletionBudget tiny;
  tiny.max_pairs = 1;
  GeneratorSet gens{P("x1*x2 - x3"), P("x2*x3 - x1"), P("x1*x3 - x2")};
  try {
    groebner_complete(gens, tiny);
    FAIL() << "expected CompletionExhausted";
  } catch (const CompletionExhausted& e) {
    EXPECT_GE(e.partial().size(), gens.size());
    EXPECT_LE(e.pairs_processed(), 1u);
  }
}

TEST(Groebner, ReducedBasisRecognition) {
  EXPECT_TRUE(is_reduced_groebner_basis(GeneratorSet{P("x1"), P("x2")}));
  EXPECT_FALSE(is_reduced_groebner_basis(GeneratorSet{P("x1"), P("x1*x2 - 1")}));
  EXPECT_FALSE(is_reduced_groebner_basis(GeneratorSet{P("2*x1")}));
  EXPECT_TRUE(is_groebner_basis(GeneratorSet{P("2*x1")}));
  EXPECT_FALSE(is_groebner_basis(GeneratorSet{P("x1*x2 - 1"), P("x1*x3 - 1")}));
}

TEST(StrongReduce, TraceStrictlyDecreases) {
  GeneratorSet basis{P("x1 - x2"), P("x2^2 - 1")};
  std::vector<Term> trace;
  Reduction r = strong_reduce(P("x1^3 + x1"), basis, &trace);
  for (std::size_t i = 1; i < trace.size(); ++i) EXPECT_LT(trace[i].mono, trace[i - 1].mono);
  EXPECT_GT(r.steps, 0u);
}

}  // namespace
