#include <gtest/gtest.h>

#include "alexcalc/errors.hpp"
#include "alexcalc/invariants.hpp"
#include "support/oracles.hpp"

using namespace alexcalc;
using alexcalc::testing::Generator;

namespace {

LaurentPoly t_pow(std::int64_t c, std::int64_t p) { return LaurentPoly::power(c, p); }
const LaurentPoly kOne(1);

IntMatrix ints(const std::vector<std::vector<Integer>>& rows) { return IntMatrix::from_rows(rows); }

SeifertPair one_by_one(int s, int n) { return SeifertPair(ints({{s}}), ints({{n}}), 1, 2); }

NormalizedInput twist(const IntMatrix& s, const IntMatrix& n, bool injective = true) {
  return {SeifertPair(s, n, 1, 1), injective};
}

}  // namespace

TEST(ZAlexander, Examples) {
  EXPECT_EQ(z_alexander(one_by_one(4, 4)), BalancedClass(Integer(4) * t_minus_one(), RingTag::Z));
  EXPECT_EQ(z_alexander(one_by_one(1, 0)), BalancedClass(t_pow(1, 1), RingTag::Z));
  EXPECT_EQ(z_alexander(SeifertPair()).representative(), kOne);
  EXPECT_THROW(z_alexander(SeifertPair(IntMatrix(1, 2), IntMatrix(1, 2))), NotSquare);
}

TEST(QAlexander, Examples) {
  EXPECT_EQ(q_alexander(one_by_one(4, 4)).representative(), t_minus_one());
  EXPECT_EQ(q_alexander(one_by_one(3, 3)).representative(), t_minus_one());
  EXPECT_TRUE(q_alexander(one_by_one(0, 0)).representative().is_zero());
  EXPECT_EQ(q_alexander(one_by_one(0, 0)).ring(), RingTag::Q);
}

TEST(NormalizedAlexander, TwistTriple) {
  EXPECT_EQ(normalized_alexander(twist(ints({{0, -1}, {0, -1}}), ints({{0, 0}, {-1, -1}}))), kOne);
  EXPECT_EQ(normalized_alexander(twist(ints({{-1, -1}, {0, -1}}), ints({{-1, 0}, {-1, -1}}))),
            t_pow(1, 1) + t_pow(1, -1) - kOne);
  EXPECT_EQ(normalized_alexander(twist(ints({{-1}}), ints({{-1}}))), -half_difference());
}

TEST(NormalizedAlexander, FailedMiddleConditionGivesZero) {
  EXPECT_TRUE(
      normalized_alexander(twist(ints({{-1, -1}, {0, -1}}), ints({{-1, 0}, {-1, -1}}), false))
          .is_zero());
  EXPECT_TRUE(normalized_alexander(twist(ints({{5}}), ints({{2}}), false)).is_zero());
  EXPECT_THROW(normalized_alexander(twist(IntMatrix(1, 2), IntMatrix(1, 2))), NotSquare);
}

TEST(PseudoAlinking, FromPolynomial) {
  EXPECT_EQ(pseudo_alinking_from_poly(Integer(4) * t_minus_one()), 4);
  EXPECT_EQ(pseudo_alinking_from_poly(LaurentPoly()), 0);
  EXPECT_EQ(pseudo_alinking_from_poly(t_minus_one()), 1);
  EXPECT_EQ(pseudo_alinking_from_poly(Integer(-3) * t_minus_one() * t_pow(1, 5)), 3);
  EXPECT_THROW(pseudo_alinking_from_poly(t_pow(2, 1) - kOne), NotDivisible);
  EXPECT_THROW(pseudo_alinking_from_poly(half_difference()), NonIntegerExponent);
}

TEST(PseudoAlinking, FromPair) {
  EXPECT_EQ(pseudo_alinking_from_pair(one_by_one(4, 4)), 4);
  EXPECT_EQ(pseudo_alinking_from_pair(one_by_one(0, 0)), 0);
  EXPECT_EQ(pseudo_alinking_from_pair(one_by_one(-7, -7)), 7);

  const SeifertPair pair(ints({{3, 0}, {1, 1}}), ints({{3, 0}, {1, 0}}), 1, 2);
  ASSERT_EQ(intersection_form(pair), ints({{0, 0}, {0, 1}}));
  // Polynomial route: det = 3t(t - 1).
  ASSERT_EQ(pseudo_alinking_from_poly(det(alexander_matrix(pair))), 3);
  EXPECT_EQ(pseudo_alinking_from_pair(pair), 3);
}

TEST(PseudoAlinking, PairPreconditions) {
  EXPECT_THROW(pseudo_alinking_from_pair(one_by_one(4, 3)), PreconditionViolated);
  EXPECT_THROW(pseudo_alinking_from_pair(SeifertPair()), PreconditionViolated);
  // Intersection form [[0,0],[1,1]]: first column of row 2 must vanish.
  EXPECT_THROW(pseudo_alinking_from_pair(
                   SeifertPair(ints({{1, 0}, {1, 1}}), ints({{1, 0}, {0, 0}}), 1, 2)),
               PreconditionViolated);
}

TEST(PseudoTwinkling, FromPair) {
  EXPECT_EQ(pseudo_twinkling_from_pair(SeifertPair(ints({{-1}}), ints({{-1}}))), -1);
  EXPECT_EQ(pseudo_twinkling_from_pair(SeifertPair(ints({{0}}), ints({{0}}))), 0);

  // S - S^T = diag(0, [[0,1],[-1,0]]).
  const IntMatrix s = ints({{2, 1, 0}, {1, 0, 1}, {0, 0, 0}});
  const SeifertPair pair(s, s.transpose(), 1, 1);
  ASSERT_EQ(first_order_at_one(det(normalized_matrix(pair))), 2);
  EXPECT_EQ(pseudo_twinkling_from_pair(pair), 2);
}

TEST(PseudoTwinkling, Preconditions) {
  EXPECT_THROW(pseudo_twinkling_from_pair(SeifertPair(ints({{1}}), ints({{0}}))),
               PreconditionViolated);
  // Complementary block [[0,2],[-2,0]] has determinant 4.
  const IntMatrix s = ints({{1, 0, 0}, {0, 0, 2}, {0, 0, 0}});
  EXPECT_THROW(pseudo_twinkling_from_pair(SeifertPair(s, s.transpose())), PreconditionViolated);
  EXPECT_THROW(pseudo_twinkling_from_pair(SeifertPair(IntMatrix(1, 2), IntMatrix(1, 2))),
               PreconditionViolated);
}

TEST(OrderAtOne, FirstOrder) {
  EXPECT_EQ(first_order_at_one(half_difference()), 1);
  EXPECT_EQ(first_order_at_one(-half_difference()), -1);
  EXPECT_EQ(first_order_at_one(LaurentPoly()), 0);
  EXPECT_THROW(first_order_at_one(kOne), NotDivisible);
}

TEST(OrderAtOne, SecondOrder) {
  const LaurentPoly jump = LaurentPoly(2) - t_pow(1, 1) - t_pow(1, -1);
  EXPECT_EQ(second_order_at_one(jump), -1);
  EXPECT_EQ(second_order_at_one(half_difference() * half_difference()), 1);
  EXPECT_EQ(second_order_at_one(LaurentPoly()), 0);
  EXPECT_THROW(second_order_at_one(half_difference()), NotDivisible);
}

TEST(Arf, Examples) {
  EXPECT_EQ(arf({{1}, {1}}), 1);
  EXPECT_EQ(arf({{0, 0}, {5, 7}}), 0);
  EXPECT_EQ(arf({{1, 1}, {1, 0}}), 1);
  EXPECT_EQ(arf({{-3}, {5}}), 1);
  EXPECT_EQ(arf({{}, {}}), 0);
  EXPECT_THROW(arf({{1, 2}, {1}}), ShapeMismatch);
}

TEST(AlexanderReport, CarriesClassesAndScalars) {
  const InvariantReport report = alexander_report(one_by_one(4, 4));
  EXPECT_EQ(report.polynomial, Integer(4) * t_minus_one());
  EXPECT_EQ(report.class_q.representative(), t_minus_one());
  EXPECT_EQ(report.scalars.at("value_at_one"), 0);
  EXPECT_EQ(report.scalars.at("pseudo_alinking"), 4);

  const InvariantReport knot = alexander_report(SeifertPair(ints({{-1, 1}, {0, -1}}),
                                                            ints({{-1, 0}, {1, -1}})));
  EXPECT_EQ(knot.scalars.at("value_at_one"), 1);
  EXPECT_FALSE(knot.scalars.contains("pseudo_alinking"));
}

// ---------------------------------------------------------------------------
// Properties

TEST(InvariantProperties, AlinkingPairRouteMatchesPolynomialRoute) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const SeifertPair pair = gen.alinking_pair(static_cast<std::size_t>(gen.uniform(1, 5)));
    const Integer by_pair = pseudo_alinking_from_pair(pair);
    const Integer by_poly = pseudo_alinking_from_poly(det(alexander_matrix(pair)));
    ASSERT_EQ(by_pair, by_poly);
    // Vanishing is detected identically by both routes.
    ASSERT_EQ(by_pair == 0, by_poly == 0);
  }
}

TEST(InvariantProperties, AlinkingIgnoresUnits) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const LaurentPoly f = t_minus_one() * gen.poly(4, 8, true);
    const LaurentPoly unit_multiple = f.shifted(2 * gen.uniform(-6, 6)) * Integer(gen.coin() ? 1 : -1);
    ASSERT_EQ(pseudo_alinking_from_poly(unit_multiple), pseudo_alinking_from_poly(f));
  }
}

TEST(InvariantProperties, TwinklingPairRouteMatchesPolynomialRoute) {
  Generator gen;
  for (int i = 0; i < 500; ++i) {
    const SeifertPair pair = gen.twinkling_pair(static_cast<std::size_t>(gen.uniform(0, 2)));
    const Integer by_pair = pseudo_twinkling_from_pair(pair);
    const Integer by_poly = first_order_at_one(normalized_alexander({pair, true}));
    ASSERT_EQ(by_pair, by_poly);
  }
}

TEST(InvariantProperties, NormalizedEvenSizeIsSymmetricWithValueDetSMinusSt) {
  Generator gen;
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(2 * gen.uniform(0, 2));
    const IntMatrix s = gen.int_matrix(n, n, 4);
    const LaurentPoly d = normalized_alexander({SeifertPair(s, s.transpose()), true});
    ASSERT_TRUE(is_inversion_symmetric(d));
    ASSERT_EQ(eval_at_one(d), det(s - s.transpose()));
  }
}

TEST(InvariantProperties, ArfIgnoresPermutationAndEvenShifts) {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 6));
    ArfData data;
    for (std::size_t k = 0; k < n; ++k) {
      data.x_self_linking.push_back(gen.uniform(-5, 5));
      data.y_self_linking.push_back(gen.uniform(-5, 5));
    }
    const int base = arf(data);
    ArfData permuted = data;
    const auto a = static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto b = static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(n) - 1));
    std::swap(permuted.x_self_linking[a], permuted.x_self_linking[b]);
    std::swap(permuted.y_self_linking[a], permuted.y_self_linking[b]);
    ASSERT_EQ(arf(permuted), base);
    ArfData shifted = data;
    (gen.coin() ? shifted.x_self_linking : shifted.y_self_linking)[a] += 2;
    ASSERT_EQ(arf(shifted), base);
  }
}
