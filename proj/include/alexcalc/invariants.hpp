#pragma once

// Polynomial and numerical invariants read off Seifert data.

#include <map>
#include <string>
#include <vector>

#include "alexcalc/balance.hpp"
#include "alexcalc/laurent.hpp"
#include "alexcalc/seifert.hpp"

namespace alexcalc {

/// Middle-dimensional pair of a (4k+1)-knot together with whether the
/// 2k-Alexander matrix induces an injective map. The flag comes from the
/// caller; it is not derivable from the pair.
struct NormalizedInput {
  SeifertPair pair;
  bool middle_injective = true;
};

/// Diagonal Seifert pairings lk(x_i, x_i^+) and lk(y_i, y_i^+) over a
/// Z_2-symplectic basis {x_i, y_i}.
struct ArfData {
  std::vector<Integer> x_self_linking;
  std::vector<Integer> y_self_linking;
};

struct InvariantReport {
  LaurentPoly polynomial;
  BalancedClass class_z;
  BalancedClass class_q;
  std::map<std::string, Integer> scalars;
};

BalancedClass z_alexander(const SeifertPair& pair);
BalancedClass q_alexander(const SeifertPair& pair);

/// det(t^{1/2} S - t^{-1/2} N), or 0 when the middle condition fails.
LaurentPoly normalized_alexander(const NormalizedInput& input);

/// |((delta / (t - 1)) at t = 1|; zero for delta = 0.
/// Throws NonIntegerExponent or NotDivisible.
Integer pseudo_alinking_from_poly(const LaurentPoly& delta);

/// |S(1,1)| for a pair whose intersection form is diag(0, 1, ..., 1).
/// Throws PreconditionViolated otherwise.
Integer pseudo_alinking_from_pair(const SeifertPair& pair);

/// Signed S(1,1) for a pair whose intersection form has vanishing first row
/// and column and a unimodular complementary block.
Integer pseudo_twinkling_from_pair(const SeifertPair& pair);

/// (f / (t^{1/2} - t^{-1/2})) at t = 1.
Integer first_order_at_one(const LaurentPoly& f);
/// (f / (t^{1/2} - t^{-1/2})^2) at t = 1.
Integer second_order_at_one(const LaurentPoly& f);

/// Sum of x_i * y_i mod 2, in {0, 1}. Throws ShapeMismatch.
int arf(const ArfData& data);

/// Determinant of t S - N with its classes; scalars carry the value at t = 1
/// and the pseudo-alinking number when (t - 1) divides the determinant.
InvariantReport alexander_report(const SeifertPair& pair);

}  // namespace alexcalc
