#include "alexcalc/skein.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "alexcalc/errors.hpp"

namespace alexcalc {

namespace {

SkeinVerdict verdict(const LaurentPoly& dp, const LaurentPoly& dm, const LaurentPoly& d0,
                     const LaurentPoly& factor) {
  SkeinVerdict v;
  v.lhs = dp - dm;
  v.rhs = factor * d0;
  v.residual = v.lhs - v.rhs;
  v.holds = v.residual.is_zero();
  return v;
}

void require_integer_powers(const LaurentPoly& f, const char* which) {
  if (!f.has_integer_powers()) {
    throw NonIntegerExponent(std::string("pass-move polynomial ") + which +
                             " has half powers: " + to_string(f));
  }
}

auto unit_key(const UnitShift& u) {
  const std::int64_t magnitude = u.exponent < 0 ? -u.exponent : u.exponent;
  return std::make_tuple(magnitude, u.exponent < 0, u.sign < 0);
}

auto witness_key(const std::array<UnitShift, 3>& s) {
  const std::int64_t total = std::get<0>(unit_key(s[0])) + std::get<0>(unit_key(s[1])) +
                             std::get<0>(unit_key(s[2]));
  return std::make_tuple(total, unit_key(s[0]), unit_key(s[1]), unit_key(s[2]));
}

std::vector<UnitShift> units_for(const LaurentPoly& f, std::int64_t window) {
  // Every unit multiple of zero is zero; the identity stands for all of them.
  if (f.is_zero()) return {UnitShift{}};
  std::vector<UnitShift> out;
  for (std::int64_t n = -window; n <= window; ++n) {
    out.push_back({1, n});
    out.push_back({-1, n});
  }
  return out;
}

// The unit u with lhs == (t - 1) * u(zero_rep), if any.
std::optional<UnitShift> solve_zero_unit(const LaurentPoly& lhs, const LaurentPoly& zero_rep,
                                         std::int64_t window) {
  if (zero_rep.is_zero()) {
    return lhs.is_zero() ? std::optional<UnitShift>(UnitShift{}) : std::nullopt;
  }
  if (lhs.is_zero() || eval_at_one(lhs) != 0) return std::nullopt;
  const LaurentPoly quotient = exact_div(lhs, t_minus_one());
  if (quotient.term_count() != zero_rep.term_count()) return std::nullopt;
  const HalfExp shift = quotient.span()->low - zero_rep.span()->low;
  if (shift % 2 != 0 || shift / 2 < -window || shift / 2 > window) return std::nullopt;
  const LaurentPoly aligned = zero_rep.shifted(shift);
  if (quotient == aligned) return UnitShift{1, shift / 2};
  if (quotient == -aligned) return UnitShift{-1, shift / 2};
  return std::nullopt;
}

}  // namespace

SkeinVerdict check_pass_move(const LaurentPoly& dp, const LaurentPoly& dm, const LaurentPoly& d0) {
  require_integer_powers(dp, "plus");
  require_integer_powers(dm, "minus");
  require_integer_powers(d0, "zero");
  return verdict(dp, dm, d0, t_minus_one());
}

SkeinVerdict check_twist_move(const LaurentPoly& dp, const LaurentPoly& dm,
                              const LaurentPoly& d0) {
  return verdict(dp, dm, d0, half_difference());
}

std::int64_t representative_window(const BalancedClass& cp, const BalancedClass& cm,
                                   const BalancedClass& c0) {
  std::int64_t total_span = 0;
  for (const BalancedClass* c : {&cp, &cm, &c0}) {
    if (auto s = c->representative().span()) total_span += s->width() / 2;
  }
  return 1 + total_span;
}

RepresentativeWitness find_representatives(const BalancedClass& cp, const BalancedClass& cm,
                                           const BalancedClass& c0) {
  for (const BalancedClass* c : {&cp, &cm, &c0}) {
    if (c->ring() != RingTag::Z) {
      throw PreconditionViolated("representative search needs Z[t,t^-1] classes");
    }
  }
  const LaurentPoly& plus = cp.representative();
  const LaurentPoly& minus = cm.representative();
  const LaurentPoly& zero = c0.representative();
  const std::int64_t window = representative_window(cp, cm, c0);

  std::optional<std::array<UnitShift, 3>> best;
  const std::vector<UnitShift> minus_units = units_for(minus, window);
  for (const UnitShift& up : units_for(plus, window)) {
    const LaurentPoly shifted_plus = up.apply(plus);
    for (const UnitShift& um : minus_units) {
      const LaurentPoly lhs = shifted_plus - um.apply(minus);
      const auto uz = solve_zero_unit(lhs, zero, window);
      if (!uz) continue;
      const std::array<UnitShift, 3> candidate{up, um, *uz};
      if (!best || witness_key(candidate) < witness_key(*best)) best = candidate;
    }
  }

  RepresentativeWitness witness;
  if (!best) return witness;
  witness.found = true;
  witness.shifts = *best;
  witness.representatives = {best->at(0).apply(plus), best->at(1).apply(minus),
                             best->at(2).apply(zero)};
  const SkeinVerdict check = check_pass_move(witness.representatives[0],
                                             witness.representatives[1],
                                             witness.representatives[2]);
  if (!check.holds) throw std::logic_error("representative witness failed re-verification");
  return witness;
}

}  // namespace alexcalc
