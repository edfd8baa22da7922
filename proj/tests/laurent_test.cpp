#include <gtest/gtest.h>

#include "alexcalc/errors.hpp"
#include "alexcalc/laurent.hpp"
#include "support/oracles.hpp"

using namespace alexcalc;
using alexcalc::testing::Generator;
using alexcalc::testing::schoolbook_product;

namespace {

LaurentPoly t_pow(std::int64_t c, std::int64_t p) { return LaurentPoly::power(c, p); }
const LaurentPoly kOne(1);

}  // namespace

TEST(Laurent, AddExamples) {
  const LaurentPoly t = t_pow(1, 1);
  const LaurentPoly knot_minus = t_pow(2, 1) - kOne;
  EXPECT_EQ(add(t, -knot_minus), kOne - t);

  const LaurentPoly f = t + t_pow(1, -1) - kOne;
  EXPECT_EQ(add(f, LaurentPoly()), f);
  EXPECT_TRUE(add(f, kOne - t - t_pow(1, -1)).is_zero());
}

TEST(Laurent, ZeroCoefficientsAreNeverStored) {
  const LaurentPoly f{{0, 3}, {2, 0}, {4, -1}};
  EXPECT_EQ(f.term_count(), 2u);
  EXPECT_FALSE(f.terms().contains(2));
  LaurentPoly g = f;
  g -= f;
  EXPECT_TRUE(g.terms().empty());
  EXPECT_FALSE(g.span().has_value());
}

TEST(Laurent, MulExamples) {
  EXPECT_EQ(mul(t_minus_one(), LaurentPoly(-1)), kOne - t_pow(1, 1));
  const LaurentPoly f{{-3, 2}, {5, -7}};
  EXPECT_EQ(mul(f, kOne), f);

  // Oracle first, then the frozen value.
  const LaurentPoly a = half_difference();
  const LaurentPoly b = -half_difference();
  const LaurentPoly oracle = schoolbook_product(a, b);
  const LaurentPoly frozen{{-2, -1}, {0, 2}, {2, -1}};
  ASSERT_EQ(oracle, frozen);
  EXPECT_EQ(mul(a, b), frozen);
}

TEST(Laurent, ExactDivExamples) {
  const LaurentPoly f = t_pow(2, 2) - t_pow(3, 1) + kOne;
  const LaurentPoly q = exact_div(f, t_minus_one());
  ASSERT_EQ(q * t_minus_one(), f);
  EXPECT_EQ(q, t_pow(2, 1) - kOne);

  EXPECT_TRUE(exact_div(LaurentPoly(), t_minus_one()).is_zero());
  EXPECT_EQ(exact_div(t_minus_one(), t_minus_one()), kOne);
  EXPECT_EQ(exact_div(t_minus_one() * Integer(4) - t_minus_one() * Integer(3), t_minus_one()),
            kOne);
}

TEST(Laurent, ExactDivAcrossHalfGrid) {
  EXPECT_EQ(exact_div(t_pow(1, 1), LaurentPoly::monomial(1, 1)), LaurentPoly::monomial(1, 1));
  const LaurentPoly z = half_difference();
  EXPECT_EQ(exact_div(z * z * z, z), z * z);
}

TEST(Laurent, ExactDivRejectsRemainders) {
  EXPECT_THROW(exact_div(t_pow(1, 1), t_minus_one()), NotDivisible);
  // Divisible over Q but not over Z.
  EXPECT_THROW(exact_div(t_minus_one(), t_minus_one() * Integer(2)), NotDivisible);
  EXPECT_THROW(exact_div(t_pow(1, 2) + kOne, t_minus_one()), NotDivisible);
  EXPECT_THROW(exact_div(kOne, LaurentPoly()), NotDivisible);
  // Quotient degree bound: low term divides but high end overshoots.
  EXPECT_THROW(exact_div(kOne, kOne + t_pow(1, 1)), NotDivisible);
}

TEST(Laurent, EvalAtOne) {
  EXPECT_EQ(eval_at_one(t_minus_one() * Integer(4)), 0);
  EXPECT_EQ(eval_at_one(t_pow(1, 1) + t_pow(1, -1) - kOne), 1);
  EXPECT_EQ(eval_at_one(LaurentPoly()), 0);
  EXPECT_EQ(eval_at_one(half_difference()), 0);
}

TEST(Laurent, InvertVariable) {
  const LaurentPoly sym = t_pow(1, 1) + t_pow(1, -1) - kOne;
  EXPECT_EQ(invert_variable(sym), sym);
  EXPECT_EQ(invert_variable(LaurentPoly::monomial(1, 1)), LaurentPoly::monomial(1, -1));
  EXPECT_TRUE(invert_variable(LaurentPoly()).is_zero());
}

TEST(Laurent, InversionSymmetry) {
  EXPECT_TRUE(is_inversion_symmetric(t_pow(1, 1) + t_pow(1, -1) - kOne));
  EXPECT_FALSE(is_inversion_symmetric(t_pow(1, 1)));
  EXPECT_FALSE(is_inversion_symmetric(-half_difference()));
  EXPECT_TRUE(is_inversion_symmetric(LaurentPoly()));
}

TEST(Laurent, SpanAndContent) {
  const LaurentPoly f{{-3, 6}, {4, -9}};
  ASSERT_TRUE(f.span().has_value());
  EXPECT_EQ(*f.span(), (HalfExpSpan{-3, 4}));
  EXPECT_EQ(f.span()->width(), 7);
  EXPECT_EQ(f.content(), 3);
  EXPECT_EQ(f.leading_coefficient(), -9);
  EXPECT_FALSE(f.has_integer_powers());
  EXPECT_EQ(LaurentPoly().content(), 0);
}

TEST(Laurent, BigCoefficientsStayExact) {
  LaurentPoly f = t_minus_one();
  for (int i = 0; i < 7; ++i) f = f * f;  // (t - 1)^128
  EXPECT_EQ(f.coefficient(128), Integer("23951146041928082866135587776380551750"));  // C(128, 64)
  EXPECT_EQ(eval_at_one(f), 0);
  LaurentPoly g = f;
  for (int i = 0; i < 128; ++i) g = exact_div(g, t_minus_one());
  EXPECT_EQ(g, kOne);
}

TEST(LaurentText, RendersCanonicalForm) {
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(to_string(LaurentPoly{{-2, -1}, {0, 2}, {2, -1}}), "-1*t^-1 + 2 + -1*t^1");
  EXPECT_EQ(to_string(half_difference()), "-1*t^(-1/2) + 1*t^(1/2)");
  EXPECT_EQ(to_string(LaurentPoly{{-1, 1}, {1, -1}}), "1*t^(-1/2) + -1*t^(1/2)");
  EXPECT_EQ(to_string(LaurentPoly{{3, 5}}), "5*t^(3/2)");
}

TEST(LaurentText, ParsesCanonicalForm) {
  EXPECT_EQ(parse_laurent("0"), LaurentPoly());
  EXPECT_EQ(parse_laurent("-1*t^-1 + 2 + -1*t^1"), (LaurentPoly{{-2, -1}, {0, 2}, {2, -1}}));
  EXPECT_EQ(parse_laurent("1*t^(-1/2) + -1*t^(1/2)"), (LaurentPoly{{-1, 1}, {1, -1}}));
  EXPECT_EQ(parse_laurent("123456789012345678901234567890*t^7"),
            LaurentPoly::power(Integer("123456789012345678901234567890"), 7));
}

TEST(LaurentText, RejectsNonCanonicalText) {
  for (const char* bad : {"", "t", "1*t", "+1", "1 +2", "1*t^1 + 2", "0*t^1", "1*t^0",
                          "1*t^(2/2)", "1*t^(1/3)", "01", "2 + 2", "1*t^ 1", "--1", "1 + "}) {
    EXPECT_THROW(parse_laurent(bad), ParseError) << bad;
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(LaurentProperties, RingAxioms) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = gen.poly(), g = gen.poly(), h = gen.poly();
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f + g) + h, f + (g + h));
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f * g, schoolbook_product(f, g));
  }
}

TEST(LaurentProperties, DivisionUndoesMultiplication) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = gen.poly();
    const LaurentPoly g = gen.nonzero_poly();
    ASSERT_EQ(exact_div(f * g, g), f) << f << " / " << g;
  }
}

TEST(LaurentProperties, EvaluationIsMultiplicative) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = gen.poly(), g = gen.poly();
    ASSERT_EQ(eval_at_one(f * g), eval_at_one(f) * eval_at_one(g));
  }
}

TEST(LaurentProperties, InversionIsInvolutiveHomomorphism) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = gen.poly(), g = gen.poly();
    ASSERT_EQ(invert_variable(invert_variable(f)), f);
    ASSERT_EQ(invert_variable(f * g), invert_variable(f) * invert_variable(g));
    ASSERT_EQ(invert_variable(f + g), invert_variable(f) + invert_variable(g));
  }
}

TEST(LaurentProperties, TextRoundTrip) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = gen.poly(6, 12);
    ASSERT_EQ(parse_laurent(to_string(f)), f) << to_string(f);
  }
}
