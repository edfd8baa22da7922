#pragma once

// Laurent polynomials in t^{1/2} with arbitrary-precision integer coefficients.
//
// Exponents are stored in units of one half: the key k denotes t^{k/2}, so the
// integer-power polynomials Z[t, t^-1] are exactly those with even keys only.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace alexcalc {

using Integer = mpz_class;

/// Exponent of t measured in halves.
using HalfExp = std::int64_t;

/// Smallest and largest half-exponent of a nonzero polynomial.
struct HalfExpSpan {
  HalfExp low;
  HalfExp high;

  HalfExp width() const { return high - low; }
  bool operator==(const HalfExpSpan&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<HalfExp, Integer>;

  LaurentPoly() = default;
  /// Constant polynomial.
  explicit LaurentPoly(const Integer& c) { add_term(0, c); }
  /// Zero coefficients in `terms` are dropped.
  explicit LaurentPoly(TermMap terms);
  LaurentPoly(std::initializer_list<std::pair<const HalfExp, Integer>> terms);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, HalfExp half_exp);
  /// c * t^power for an integer power of t.
  static LaurentPoly power(const Integer& c, std::int64_t power);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(HalfExp half_exp) const;

  /// Empty for the zero polynomial.
  std::optional<HalfExpSpan> span() const;

  /// True when every stored exponent is an integer power of t.
  bool has_integer_powers() const;

  /// Positive gcd of all coefficients; zero for the zero polynomial.
  Integer content() const;

  /// Coefficient of the highest power; zero for the zero polynomial.
  Integer leading_coefficient() const;

  /// Multiplies by t^{half_exp/2}.
  LaurentPoly shifted(HalfExp half_exp) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const Integer& lhs, LaurentPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  void add_term(HalfExp half_exp, const Integer& c);

  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

/// Returns q with f == q * g. Throws NotDivisible when no integral quotient
/// exists or when g is zero.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Sum of the coefficients.
Integer eval_at_one(const LaurentPoly& f);

/// Substitutes t -> t^-1.
LaurentPoly invert_variable(const LaurentPoly& f);
bool is_inversion_symmetric(const LaurentPoly& f);

/// The polynomial t - 1.
LaurentPoly t_minus_one();
/// The polynomial t^{1/2} - t^{-1/2}.
LaurentPoly half_difference();

/// Canonical text form, e.g. `-1*t^-1 + 2 + -1*t^1` or `-1*t^(1/2) + 1*t^(-1/2)`.
std::string to_string(const LaurentPoly& f);

/// Inverse of to_string; rejects anything outside the canonical grammar.
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace alexcalc
