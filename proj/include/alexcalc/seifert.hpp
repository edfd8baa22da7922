#pragma once

// Seifert-matrix pairs and the Laurent matrices built from them.

#include <vector>

#include "alexcalc/laurent.hpp"
#include "alexcalc/matrix.hpp"

namespace alexcalc {

using IntMatrix = Matrix<Integer>;
using AlexanderMatrix = Matrix<LaurentPoly>;

/// Positive and negative Seifert matrices of a (p, n+1-p) pairing on a
/// Seifert hypersurface of an n-dimensional link.
///
/// S(i,j) = lk(x_i, y_j^+) and N(i,j) = lk(x_i, y_j^-) in the same ordered
/// bases, so both matrices always share one shape.
class SeifertPair {
 public:
  SeifertPair() = default;
  /// Throws ShapeMismatch if S and N differ in shape and PreconditionViolated
  /// unless n >= 1 and 0 <= p <= n + 1.
  SeifertPair(IntMatrix positive, IntMatrix negative, int degree = 1, int dimension = 1);

  const IntMatrix& positive() const { return positive_; }
  const IntMatrix& negative() const { return negative_; }
  int degree() const { return degree_; }
  int dimension() const { return dimension_; }

  std::size_t rows() const { return positive_.rows(); }
  std::size_t cols() const { return positive_.cols(); }
  bool is_square() const { return positive_.is_square(); }

  bool operator==(const SeifertPair&) const = default;

 private:
  IntMatrix positive_;
  IntMatrix negative_;
  int degree_ = 1;
  int dimension_ = 1;
};

/// Basis changes P (on the x_i) and Q (on the y_j).
struct UnimodularPair {
  IntMatrix row_change;
  IntMatrix col_change;
};

/// Entry (i,j) is t*S(i,j) - N(i,j).
AlexanderMatrix alexander_matrix(const SeifertPair& pair);

/// Entry (i,j) is t^{1/2}*S(i,j) - t^{-1/2}*N(i,j).
AlexanderMatrix normalized_matrix(const SeifertPair& pair);

/// Exact determinant; the empty matrix has determinant 1. Uses cofactor
/// expansion up to 4x4 and fraction-free elimination beyond.
/// Throws NotSquare.
LaurentPoly det(const AlexanderMatrix& m);
Integer det(const IntMatrix& m);

/// Laplace expansion along the first row, at any size.
LaurentPoly det_by_expansion(const AlexanderMatrix& m);
/// Bareiss elimination with row pivoting, at any size.
LaurentPoly det_by_elimination(const AlexanderMatrix& m);

/// S - N.
IntMatrix intersection_form(const SeifertPair& pair);

/// True iff a.N == (-1)^{p n + 1} * transpose(b.S), where a has degree p and
/// b is the complementary pairing of degree n + 1 - p.
bool check_duality(const SeifertPair& a, const SeifertPair& b);

/// True iff S == (-1)^m * transpose(S). Throws NotSquare.
bool check_mars_symmetry(const IntMatrix& s, int m);

/// S' = P S Q^T and N' = P N Q^T. Throws ShapeMismatch or NotUnimodular.
SeifertPair basis_change(const SeifertPair& pair, const UnimodularPair& change);

/// Block matrix [[sign*t, filler], [0, M]]. `sign` must be +1 or -1.
AlexanderMatrix stabilize(const AlexanderMatrix& m, int sign,
                          const std::vector<LaurentPoly>& filler);

}  // namespace alexcalc
