#pragma once

// Arithmetic in the (d, n)-plane of a 2-codimensional subvariety X of V:
// [X] = d chi^2 and det N = O(n) for the rank-2 bundle N with zero locus X.
//
//   Delta = 4d - n^2          discriminant
//   e(k)  = d - n k + k^2     c2 of N^vee(k)
//   s_j   = sum_a z^a zbar^(j-a) for the Chern roots z, zbar of N

#include <cstdint>
#include <optional>
#include <vector>

#include "cicrit/exact_arith.hpp"
#include "cicrit/root_systems.hpp"

namespace cicrit {

class BundleNumerics {
 public:
  /// Throws PreconditionViolation unless d >= 1 and n >= 1.
  BundleNumerics(std::int64_t d, std::int64_t n);

  std::int64_t d() const { return d_; }
  std::int64_t n() const { return n_; }

 private:
  std::int64_t d_;
  std::int64_t n_;
};

std::int64_t discriminant(const BundleNumerics& b);

std::int64_t e_value(const BundleNumerics& b, std::int64_t k);

/// Smallest k in [1, floor(n/2)] with e(k) >= 0, or nullopt when there is none.
/// Such a k exists exactly when e(1) >= 0, i.e. d >= n - 1.
/// Throws PreconditionViolation when Delta > 0.
std::optional<std::int64_t> e_nonneg_witness(const BundleNumerics& b);

/// s_0 .. s_{j_max} via s_0 = 1, s_1 = n, s_j = n s_{j-1} - d s_{j-2}.
std::vector<Integer> segre_numbers(const BundleNumerics& b, unsigned j_max);

/// True when Segre positivity fails: some s_j <= 0 with 1 <= j <= p_v - 2.
/// This is the exact integer form of |t| < pi/(p_v - 1) for the argument t of
/// the Chern roots. Requires Delta > 0 and p_v >= 3.
bool angle_exclusion(const BundleNumerics& b, unsigned p_v);

/// Lower bound on the degree of X when Delta > 0.
///   sharp = false: sp^2 (p-1)^2 / 240, exact.
///   sharp = true:  delta_min(sp) (p-1)^2 / (4 pi^2), rounded down to a
///                  certified rational with denominator 10^12.
/// Requires p >= 2 and a known sp; lower-bound table values are used as given.
Rational degree_lower_bound(const VarietyInvariants& inv, bool sharp);

}  // namespace cicrit
