#pragma once

// Local-move identities across triples (K+, K-, K0).

#include <array>
#include <cstdint>

#include "alexcalc/balance.hpp"
#include "alexcalc/laurent.hpp"

namespace alexcalc {

struct SkeinVerdict {
  bool holds = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
  LaurentPoly residual;  // lhs - rhs
};

/// Unit multiplier sign * t^exponent.
struct UnitShift {
  int sign = 1;
  std::int64_t exponent = 0;

  LaurentPoly apply(const LaurentPoly& f) const {
    return f.shifted(2 * exponent) * Integer(sign);
  }
  bool operator==(const UnitShift&) const = default;
};

struct RepresentativeWitness {
  bool found = false;
  /// Shifts applied to the plus, minus and zero representatives.
  std::array<UnitShift, 3> shifts{};
  /// Shifted representatives; valid only when found.
  std::array<LaurentPoly, 3> representatives{};
};

/// dp - dm == (t - 1) * d0. Throws NonIntegerExponent.
SkeinVerdict check_pass_move(const LaurentPoly& dp, const LaurentPoly& dm, const LaurentPoly& d0);

/// dp - dm == (t^{1/2} - t^{-1/2}) * d0.
SkeinVerdict check_twist_move(const LaurentPoly& dp, const LaurentPoly& dm, const LaurentPoly& d0);

/// Half-width W of the exponent window searched by find_representatives:
/// 1 plus the summed degree spans of the three representatives.
std::int64_t representative_window(const BalancedClass& cp, const BalancedClass& cm,
                                   const BalancedClass& c0);

/// Searches unit multiples of the three Z-class representatives, with every
/// exponent in [-W, W], for an exact pass-move identity. Among all witnesses
/// the one with the smallest total |exponent| wins; ties are broken
/// lexicographically over (plus, minus, zero), each unit ordered by |exponent|,
/// then positive exponent first, then sign +1 first.
/// Throws PreconditionViolated for classes outside Z[t, t^-1].
RepresentativeWitness find_representatives(const BalancedClass& cp, const BalancedClass& cm,
                                           const BalancedClass& c0);

}  // namespace alexcalc
