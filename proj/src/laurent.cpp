#include "alexcalc/laurent.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <vector>

#include "alexcalc/errors.hpp"

namespace alexcalc {

LaurentPoly::LaurentPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& term) { return term.second == 0; });
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const HalfExp, Integer>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, HalfExp half_exp) {
  LaurentPoly out;
  out.add_term(half_exp, c);
  return out;
}

LaurentPoly LaurentPoly::power(const Integer& c, std::int64_t power) {
  return monomial(c, 2 * power);
}

Integer LaurentPoly::coefficient(HalfExp half_exp) const {
  auto it = terms_.find(half_exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<HalfExpSpan> LaurentPoly::span() const {
  if (terms_.empty()) return std::nullopt;
  return HalfExpSpan{terms_.begin()->first, terms_.rbegin()->first};
}

bool LaurentPoly::has_integer_powers() const {
  for (const auto& [k, c] : terms_) {
    if (k % 2 != 0) return false;
  }
  return true;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

Integer LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::shifted(HalfExp half_exp) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + half_exp, c);
  return out;
}

void LaurentPoly::add_term(HalfExp half_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [a, ca] : lhs.terms_) {
    for (const auto& [b, cb] : rhs.terms_) out.add_term(a + b, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (f.is_zero()) return {};

  const auto [g_low, g_high] = *g.span();
  const auto [f_low, f_high] = *f.span();
  const Integer& g_low_coeff = g.terms().begin()->second;
  // Every quotient exponent lies in [f_low - g_low, f_high - g_high].
  const HalfExp q_high = f_high - g_high;

  LaurentPoly::TermMap quotient;
  LaurentPoly remainder = f;
  Integer c;
  while (!remainder.is_zero()) {
    const auto& [r_low, r_coeff] = *remainder.terms().begin();
    const HalfExp q_exp = r_low - g_low;
    if (q_exp > q_high) throw NotDivisible("nonzero remainder in exact division");
    if (!mpz_divisible_p(r_coeff.get_mpz_t(), g_low_coeff.get_mpz_t())) {
      throw NotDivisible("quotient would need fractional coefficients");
    }
    mpz_divexact(c.get_mpz_t(), r_coeff.get_mpz_t(), g_low_coeff.get_mpz_t());
    quotient.emplace_hint(quotient.end(), q_exp, c);
    remainder -= LaurentPoly::monomial(c, q_exp) * g;
  }
  return LaurentPoly(std::move(quotient));
}

Integer eval_at_one(const LaurentPoly& f) {
  Integer sum = 0;
  for (const auto& [k, c] : f.terms()) sum += c;
  return sum;
}

LaurentPoly invert_variable(const LaurentPoly& f) {
  LaurentPoly::TermMap out;
  for (const auto& [k, c] : f.terms()) out.emplace(-k, c);
  return LaurentPoly(std::move(out));
}

bool is_inversion_symmetric(const LaurentPoly& f) { return f == invert_variable(f); }

LaurentPoly t_minus_one() { return LaurentPoly{{0, -1}, {2, 1}}; }

LaurentPoly half_difference() { return LaurentPoly{{-1, -1}, {1, 1}}; }

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (k == 0) continue;
    if (k % 2 == 0) {
      os << "*t^" << k / 2;
    } else {
      os << "*t^(" << k << "/2)";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

namespace {

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  // Optional '-', then digits without a redundant leading zero.
  std::string signed_digits() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    const std::size_t n_digits = pos_ - digits_start;
    if (n_digits == 0) fail("expected an integer");
    if (n_digits > 1 && text_[digits_start] == '0') fail("leading zero in integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  HalfExp small_integer() {
    const std::string digits = signed_digits();
    HalfExp value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("exponent out of range");
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("laurent text, column " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  if (text == "0") return {};
  TermScanner scan(text);
  LaurentPoly::TermMap terms;
  std::optional<HalfExp> previous;
  while (true) {
    const Integer c(scan.signed_digits());
    if (c == 0) scan.fail("zero coefficient");
    HalfExp k = 0;
    if (scan.consume("*t^")) {
      if (scan.consume("(")) {
        k = scan.small_integer();
        if (k % 2 == 0) scan.fail("half power with even numerator");
        if (!scan.consume("/2)")) scan.fail("expected '/2)'");
      } else {
        const HalfExp power = scan.small_integer();
        if (power == 0) scan.fail("explicit t^0");
        k = 2 * power;
      }
    }
    if (previous && k <= *previous) scan.fail("exponents must be strictly ascending");
    previous = k;
    terms.emplace(k, c);
    if (scan.done()) break;
    if (!scan.consume(" + ")) scan.fail("expected ' + '");
  }
  return LaurentPoly(std::move(terms));
}

}  // namespace alexcalc
