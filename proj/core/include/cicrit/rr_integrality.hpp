#pragma once

// Euler characteristics of twists of rank-2 bundles on P^p, computed from
// Chern numbers alone, and the Schwartzenberger integrality test.
//
// The bundle F has Chern roots r1, r2 with r1 + r2 = c1 and r1 r2 = d, and
//   chi(F(k)) = binom(r1 + k + p, p) + binom(r2 + k + p, p),
// which is a symmetric function of the roots and hence a rational number.
// Only the numerical conditions are modelled: integrality is necessary for
// such a bundle to exist, not sufficient.

#include <cstdint>
#include <vector>

#include "cicrit/exact_arith.hpp"

namespace cicrit {

/// Normalized Chern data (p, c1, d) of a rank-2 bundle on P^p; c1 is 0 or 1.
class BundleOnProjSpace {
 public:
  /// Throws PreconditionViolation unless p >= 1 and c1 is 0 or 1.
  BundleOnProjSpace(unsigned p, int c1, std::int64_t d);

  unsigned p() const { return p_; }
  int c1() const { return c1_; }
  std::int64_t d() const { return d_; }
  /// 4d - c1^2; congruent to 0 or 3 mod 4 by construction.
  std::int64_t discriminant() const { return 4 * d_ - c1_ * c1_; }

 private:
  unsigned p_;
  int c1_;
  std::int64_t d_;
};

/// chi(F(k)), exact.
Rational euler_char(const BundleOnProjSpace& bundle, std::int64_t k);

/// chi(F(k)) as a polynomial in the twist k (degree p, leading coefficient 2/p!).
Polynomial euler_char_polynomial(const BundleOnProjSpace& bundle);

/// Whether chi(F(k)) is an integer for every k. A degree-p polynomial that is
/// integral on p+1 consecutive integers is integral everywhere, so k = 0..p is checked.
bool is_integral_all_twists(const BundleOnProjSpace& bundle);

/// Integrality test on a fixed P^p specialised for scanning many (c1, d):
/// works with p!·chi(F(k)) modulo p! using precomputed integer coefficients.
/// Agrees with is_integral_all_twists.
class TwistIntegralityTable {
 public:
  explicit TwistIntegralityTable(unsigned p);

  unsigned p() const { return p_; }
  bool is_integral(int c1, std::int64_t d) const;

 private:
  unsigned p_;
  Integer modulus_;
  // scaled_[k][i] = p! * [x^i] binomial_poly(k, p), reduced mod p!
  std::vector<std::vector<Integer>> scaled_;
};

}  // namespace cicrit
