#pragma once

// Closed rational intervals and certified enclosures of pi and e.
// Every comparison involving a transcendental goes through these; a comparison
// the enclosure cannot settle throws InconclusiveComparison.

#include <string>

#include "cicrit/exact_arith.hpp"

namespace cicrit {

class RationalInterval {
 public:
  /// Degenerate interval [v, v].
  RationalInterval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws PreconditionViolation when lo > hi.
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }

  RationalInterval pow(unsigned exponent) const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  /// Throws PreconditionViolation when b contains zero.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

 private:
  Rational lo_;
  Rational hi_;
};

/// true iff every point of x is > bound; false iff every point is <= bound.
/// Throws InconclusiveComparison when the interval straddles the bound.
bool certainly_greater(const RationalInterval& x, const Rational& bound);

/// true iff every point of x is >= bound; false iff every point is < bound.
bool certainly_at_least(const RationalInterval& x, const Rational& bound);

/// Enclosure of pi of width below 1e-40 (Machin's formula with bracketing partial sums).
const RationalInterval& pi_interval();

/// Enclosure of e of width below 1e-40 (Taylor series with a geometric tail bound).
const RationalInterval& e_interval();

/// Certified check of p! >= sqrt(2 pi p) (p/e)^p.
bool stirling_lower_bound_holds(unsigned p);

}  // namespace cicrit
