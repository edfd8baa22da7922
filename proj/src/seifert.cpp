#include "alexcalc/seifert.hpp"

#include <string>
#include <utility>

namespace alexcalc {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) {
    throw NotSquare(std::string(what) + " is " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

// Divisions performed by Bareiss elimination are exact in an integral domain.
LaurentPoly divide_exactly(const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); }

Integer divide_exactly(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <typename T>
T bareiss(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == T(0)) ++pivot;
      if (pivot == n) return T(0);
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m(i, j) * m(k, k);
        cross -= m(i, k) * m(k, j);
        m(i, j) = divide_exactly(cross, previous);
      }
    }
    previous = m(k, k);
  }
  T result = m(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

template <typename T>
T expansion(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) {
    T d = m(0, 0) * m(1, 1);
    d -= m(0, 1) * m(1, 0);
    return d;
  }
  T total(0);
  Matrix<T> minor(n - 1, n - 1);
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == T(0)) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor(i - 1, mj++) = m(i, j);
      }
    }
    T term = m(0, col) * expansion(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

constexpr std::size_t kExpansionLimit = 4;

int sign_power(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

SeifertPair::SeifertPair(IntMatrix positive, IntMatrix negative, int degree, int dimension)
    : positive_(std::move(positive)),
      negative_(std::move(negative)),
      degree_(degree),
      dimension_(dimension) {
  if (!positive_.same_shape(negative_)) {
    throw ShapeMismatch("positive Seifert matrix is " + shape_string(positive_) +
                        " but negative is " + shape_string(negative_));
  }
  if (dimension_ < 1 || degree_ < 0 || degree_ > dimension_ + 1) {
    throw PreconditionViolated("need n >= 1 and 0 <= p <= n+1, got p=" +
                               std::to_string(degree_) + " n=" + std::to_string(dimension_));
  }
}

AlexanderMatrix alexander_matrix(const SeifertPair& pair) {
  AlexanderMatrix out(pair.rows(), pair.cols());
  for (std::size_t i = 0; i < pair.rows(); ++i) {
    for (std::size_t j = 0; j < pair.cols(); ++j) {
      out(i, j) = LaurentPoly{{0, -pair.negative()(i, j)}, {2, pair.positive()(i, j)}};
    }
  }
  return out;
}

AlexanderMatrix normalized_matrix(const SeifertPair& pair) {
  AlexanderMatrix out(pair.rows(), pair.cols());
  for (std::size_t i = 0; i < pair.rows(); ++i) {
    for (std::size_t j = 0; j < pair.cols(); ++j) {
      out(i, j) = LaurentPoly{{-1, -pair.negative()(i, j)}, {1, pair.positive()(i, j)}};
    }
  }
  return out;
}

LaurentPoly det_by_expansion(const AlexanderMatrix& m) {
  require_square(m.rows(), m.cols(), "Alexander matrix");
  return expansion(m);
}

LaurentPoly det_by_elimination(const AlexanderMatrix& m) {
  require_square(m.rows(), m.cols(), "Alexander matrix");
  return bareiss(m);
}

LaurentPoly det(const AlexanderMatrix& m) {
  require_square(m.rows(), m.cols(), "Alexander matrix");
  return m.rows() <= kExpansionLimit ? expansion(m) : bareiss(m);
}

Integer det(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "integer matrix");
  return m.rows() <= kExpansionLimit ? expansion(m) : bareiss(m);
}

IntMatrix intersection_form(const SeifertPair& pair) { return pair.positive() - pair.negative(); }

bool check_duality(const SeifertPair& a, const SeifertPair& b) {
  const int p = a.degree();
  const int n = a.dimension();
  if (b.dimension() != n || b.degree() != n + 1 - p) {
    throw ShapeMismatch("complementary pairing must have n=" + std::to_string(n) +
                        " and p=" + std::to_string(n + 1 - p) + ", got n=" +
                        std::to_string(b.dimension()) + " p=" + std::to_string(b.degree()));
  }
  if (b.rows() != a.cols() || b.cols() != a.rows()) {
    throw ShapeMismatch("complementary Seifert matrix is " + shape_string(b.positive()) +
                        ", expected " + std::to_string(a.cols()) + "x" +
                        std::to_string(a.rows()));
  }
  const int sign = sign_power(static_cast<long long>(p) * n + 1);
  const IntMatrix expected = scaled(b.positive().transpose(), Integer(sign));
  return a.negative() == expected;
}

bool check_mars_symmetry(const IntMatrix& s, int m) {
  require_square(s.rows(), s.cols(), "Seifert matrix");
  return s == scaled(s.transpose(), Integer(sign_power(m)));
}

SeifertPair basis_change(const SeifertPair& pair, const UnimodularPair& change) {
  const IntMatrix& p = change.row_change;
  const IntMatrix& q = change.col_change;
  if (!p.is_square() || p.rows() != pair.rows() || !q.is_square() || q.rows() != pair.cols()) {
    throw ShapeMismatch("basis change " + shape_string(p) + ", " + shape_string(q) +
                        " does not fit a " + shape_string(pair.positive()) + " pair");
  }
  if (abs(det(p)) != 1 || abs(det(q)) != 1) {
    throw NotUnimodular("basis change matrices must have determinant +-1");
  }
  const IntMatrix qt = q.transpose();
  return SeifertPair(p * pair.positive() * qt, p * pair.negative() * qt, pair.degree(),
                     pair.dimension());
}

AlexanderMatrix stabilize(const AlexanderMatrix& m, int sign,
                          const std::vector<LaurentPoly>& filler) {
  if (sign != 1 && sign != -1) {
    throw PreconditionViolated("stabilization sign must be +1 or -1");
  }
  if (!m.is_square() || filler.size() != m.cols()) {
    throw ShapeMismatch("stabilization needs a square matrix and a filler of matching length");
  }
  const std::size_t n = m.rows() + 1;
  AlexanderMatrix out(n, n);
  out(0, 0) = LaurentPoly::power(sign, 1);
  for (std::size_t j = 1; j < n; ++j) out(0, j) = filler[j - 1];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) out(i, j) = m(i - 1, j - 1);
  return out;
}

}  // namespace alexcalc
