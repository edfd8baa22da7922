#include "alexcalc/invariants.hpp"

#include <string>

#include "alexcalc/errors.hpp"

namespace alexcalc {

namespace {

LaurentPoly square_determinant(const AlexanderMatrix& m) {
  if (!m.is_square()) {
    throw NotSquare("Alexander polynomial needs a square Seifert pair, got " + shape_string(m));
  }
  return det(m);
}

bool is_zero_row_and_col(const IntMatrix& m, std::size_t index) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(index, j) != 0 || m(j, index) != 0) return false;
  return true;
}

}  // namespace

BalancedClass z_alexander(const SeifertPair& pair) {
  return BalancedClass(square_determinant(alexander_matrix(pair)), RingTag::Z);
}

BalancedClass q_alexander(const SeifertPair& pair) {
  return BalancedClass(square_determinant(alexander_matrix(pair)), RingTag::Q);
}

LaurentPoly normalized_alexander(const NormalizedInput& input) {
  const LaurentPoly determinant = square_determinant(normalized_matrix(input.pair));
  return input.middle_injective ? determinant : LaurentPoly{};
}

Integer pseudo_alinking_from_poly(const LaurentPoly& delta) {
  if (!delta.has_integer_powers()) {
    throw NonIntegerExponent("pseudo-alinking needs integer powers of t: " + to_string(delta));
  }
  if (eval_at_one(delta) != 0) {
    throw NotDivisible("polynomial does not vanish at t = 1: " + to_string(delta));
  }
  return abs(eval_at_one(exact_div(delta, t_minus_one())));
}

Integer pseudo_alinking_from_pair(const SeifertPair& pair) {
  if (!pair.is_square() || pair.rows() == 0) {
    throw PreconditionViolated("pseudo-alinking needs a nonempty square pair");
  }
  const IntMatrix form = intersection_form(pair);
  for (std::size_t i = 0; i < form.rows(); ++i) {
    for (std::size_t j = 0; j < form.cols(); ++j) {
      const int expected = (i >= 1 && i == j) ? 1 : 0;
      if (form(i, j) != expected) {
        throw PreconditionViolated("intersection form must be diag(0, 1, ..., 1); entry (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") is " + form(i, j).get_str());
      }
    }
  }
  return abs(pair.positive()(0, 0));
}

Integer pseudo_twinkling_from_pair(const SeifertPair& pair) {
  if (!pair.is_square() || pair.rows() == 0) {
    throw PreconditionViolated("pseudo-twinkling needs a nonempty square pair");
  }
  const IntMatrix form = intersection_form(pair);
  if (!is_zero_row_and_col(form, 0)) {
    throw PreconditionViolated("first row and column of the intersection form must vanish");
  }
  const std::size_t rest = form.rows() - 1;
  IntMatrix block(rest, rest);
  for (std::size_t i = 0; i < rest; ++i)
    for (std::size_t j = 0; j < rest; ++j) block(i, j) = form(i + 1, j + 1);
  if (abs(det(block)) != 1) {
    throw PreconditionViolated("complementary block of the intersection form is not unimodular");
  }
  return pair.positive()(0, 0);
}

Integer first_order_at_one(const LaurentPoly& f) {
  return eval_at_one(exact_div(f, half_difference()));
}

Integer second_order_at_one(const LaurentPoly& f) {
  return eval_at_one(exact_div(exact_div(f, half_difference()), half_difference()));
}

int arf(const ArfData& data) {
  if (data.x_self_linking.size() != data.y_self_linking.size()) {
    throw ShapeMismatch("Arf data needs equally many x and y pairings, got " +
                        std::to_string(data.x_self_linking.size()) + " and " +
                        std::to_string(data.y_self_linking.size()));
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < data.x_self_linking.size(); ++i) {
    sum += data.x_self_linking[i] * data.y_self_linking[i];
  }
  return mpz_odd_p(sum.get_mpz_t()) ? 1 : 0;
}

InvariantReport alexander_report(const SeifertPair& pair) {
  const LaurentPoly determinant = square_determinant(alexander_matrix(pair));
  InvariantReport report{determinant, BalancedClass(determinant, RingTag::Z),
                         BalancedClass(determinant, RingTag::Q), {}};
  report.scalars.emplace("value_at_one", eval_at_one(determinant));
  if (eval_at_one(determinant) == 0) {
    report.scalars.emplace("pseudo_alinking", pseudo_alinking_from_poly(determinant));
  }
  return report;
}

}  // namespace alexcalc
