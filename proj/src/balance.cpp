#include "alexcalc/balance.hpp"

#include <string>

#include "alexcalc/errors.hpp"

namespace alexcalc {

namespace {

void require_integer_powers(const LaurentPoly& f) {
  if (!f.has_integer_powers()) {
    throw NonIntegerExponent("balanced classes need integer powers of t: " + to_string(f));
  }
}

// f == +-t^n g for some n, with both f and g nonzero.
bool equal_up_to_signed_shift(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.term_count() != g.term_count()) return false;
  const HalfExp shift = f.span()->low - g.span()->low;
  const LaurentPoly aligned = g.shifted(shift);
  return f == aligned || f == -aligned;
}

}  // namespace

std::string_view to_string(RingTag ring) { return ring == RingTag::Z ? "Z" : "Q"; }

RingTag parse_ring(std::string_view text) {
  if (text == "Z") return RingTag::Z;
  if (text == "Q") return RingTag::Q;
  throw ParseError("ring must be Z or Q, got '" + std::string(text) + "'");
}

bool z_balanced_eq(const LaurentPoly& f, const LaurentPoly& g) {
  require_integer_powers(f);
  require_integer_powers(g);
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return equal_up_to_signed_shift(f, g);
}

bool q_balanced_eq(const LaurentPoly& f, const LaurentPoly& g) {
  require_integer_powers(f);
  require_integer_powers(g);
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  // f = r t^n g  <=>  c_g f = +-t^n c_f g, where c_* are the contents.
  return equal_up_to_signed_shift(f * g.content(), g * f.content());
}

LaurentPoly canonicalize(const LaurentPoly& f, RingTag ring) {
  require_integer_powers(f);
  if (f.is_zero()) return {};
  LaurentPoly out = f.shifted(-f.span()->low);
  if (ring == RingTag::Q) {
    const Integer content = out.content();
    LaurentPoly::TermMap reduced;
    Integer q;
    for (const auto& [k, c] : out.terms()) {
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      reduced.emplace_hint(reduced.end(), k, q);
    }
    out = LaurentPoly(std::move(reduced));
  }
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

}  // namespace alexcalc
