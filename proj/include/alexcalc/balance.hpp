#pragma once

// Balanced classes of integer-power Laurent polynomials.
//
// Over Z[t, t^-1] two polynomials are balanced when they differ by a unit
// +-t^n; over Q[t, t^-1] the unit may be any r * t^n with r a nonzero rational.

#include <string_view>

#include "alexcalc/laurent.hpp"

namespace alexcalc {

enum class RingTag { Z, Q };

std::string_view to_string(RingTag ring);
/// Accepts "Z" or "Q"; throws ParseError otherwise.
RingTag parse_ring(std::string_view text);

bool z_balanced_eq(const LaurentPoly& f, const LaurentPoly& g);
bool q_balanced_eq(const LaurentPoly& f, const LaurentPoly& g);

/// Class representative: lowest exponent 0 and positive leading coefficient;
/// for Q the content is divided out as well. Zero maps to zero.
LaurentPoly canonicalize(const LaurentPoly& f, RingTag ring);

class BalancedClass {
 public:
  BalancedClass(const LaurentPoly& f, RingTag ring)
      : representative_(canonicalize(f, ring)), ring_(ring) {}

  const LaurentPoly& representative() const { return representative_; }
  RingTag ring() const { return ring_; }

  bool operator==(const BalancedClass&) const = default;

 private:
  LaurentPoly representative_;
  RingTag ring_;
};

}  // namespace alexcalc
