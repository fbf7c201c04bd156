#pragma once

// Numerical complete-intersection criteria for a smooth 2-codimensional X in
// V = G/P with [X] = d chi^2 and det N = O(n), plus the split-normal-bundle
// and generator-count criteria for higher codimension.
//
// classify() evaluates, in this order:
//   hart-i    l >= 11 and d <= m^2
//   hart-ii   6 <= l <= 10, 10 d <= 3 m^2, V not OGr(3;12), OGr(3;13), SGr(3;12)
//   ran-i     Delta <= 0 and d/m + m <= n
//   ran-ii    Delta <= 0 and n/2 <= m
//   thmDgt-bound      Delta > 0 and d <= sp^2 (p-1)^2/240          (no such X)
//   segre-positivity  Delta > 0 and some s_j <= 0, j <= p-2        (no such X)
//   thmDgt-bound      Delta > 0 and d <= delta_min(sp) (p-1)^2/(4 pi^2)
// The first satisfied criterion decides the verdict; every evaluated one is
// kept in the audit trail. Delta is 4d - n^2 throughout.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cicrit/exact_arith.hpp"
#include "cicrit/root_systems.hpp"

namespace cicrit {

enum class Region {
  EmptyBelowExclusion,  // Delta > 0 below the lower parabola (Segre positivity fails)
  CometRegion,          // Delta > 0 between the parabolas, left of the degree bound
  CheckerRegion,        // Delta > 0 between the parabolas, right of the degree bound
  HorizLines_e_m_neg,   // Delta <= 0, e(m) <= 0, n > 2m
  Grid_nLow_eNeg,       // Delta <= 0, e(m) <= 0, n <= 2m
  VertLines_nLow,       // Delta <= 0, e(m) > 0, n <= 2m
  UnknownRegion,        // Delta <= 0, e(m) > 0, n > 2m
};

enum class Criterion {
  HartI,
  HartII,
  RanI,
  RanII,
  HomogSplit,
  Generators,
  DegreeBound,
  SegrePositivity,
};

enum class VerdictKind { CompleteIntersection, ExcludedNoSuchSubvariety, Unknown };

enum class Outcome { Satisfied, NotSatisfied, NotApplicable };

std::string to_string(Region region);
std::string to_string(Criterion criterion);  // "hart-i", "ran-ii", ...
std::string to_string(VerdictKind kind);
std::string to_string(Outcome outcome);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Criterion> criterion;  // set unless kind == Unknown
};

struct AppliedCriterion {
  Criterion id;
  std::vector<std::pair<std::string, std::string>> inputs;
  Outcome outcome = Outcome::NotApplicable;
  std::string detail;
};

struct ClassificationResult {
  std::int64_t delta = 0;
  Region region = Region::UnknownRegion;
  Verdict verdict;
  std::vector<AppliedCriterion> applied;
  std::vector<std::string> notes;

  const AppliedCriterion* find(Criterion id) const;
};

struct ClassifyOptions {
  /// Disable to see how the remaining criteria alone decide a point.
  bool use_hart = true;
};

/// Precomputes the invariants and degree bounds of one variety.
class Classifier {
 public:
  /// Throws DataUnavailable when invariants are missing and PreconditionViolation
  /// when Pic(V) -> Pic(X) is not known to be an isomorphism.
  explicit Classifier(const VarietyDescriptor& desc);

  const VarietyDescriptor& descriptor() const { return desc_; }
  const VarietyInvariants& invariants() const { return inv_; }

  /// Plain degree bound sp^2 (p-1)^2/240, when sp is known.
  const std::optional<Rational>& plain_degree_bound() const { return plain_bound_; }
  /// delta_min(sp) (p-1)^2 / (4 pi^2), rounded down, when sp is known.
  const std::optional<Rational>& sharp_degree_bound() const { return sharp_bound_; }
  /// The larger of the two; points with Delta > 0 and d at or below it are excluded.
  std::optional<Rational> exclusion_bound() const;

  bool hart_exception() const { return hart_exception_; }

  /// Throws PreconditionViolation unless d >= 1 and n >= 1.
  ClassificationResult classify(std::int64_t d, std::int64_t n, const ClassifyOptions& options = {}) const;

  /// Region of the (d, n)-plane figure the point falls in.
  Region region(std::int64_t d, std::int64_t n) const;

 private:
  VarietyDescriptor desc_;
  VarietyInvariants inv_;
  std::optional<Rational> plain_bound_;
  std::optional<Rational> sharp_bound_;
  bool hart_exception_ = false;
};

/// One-shot form of Classifier(desc).classify(d, n).
ClassificationResult classify(const VarietyDescriptor& desc, std::int64_t d, std::int64_t n,
                              const ClassifyOptions& options = {});

/// Region tagging without the Picard precondition (used for plotting).
Region plane_region(const VarietyInvariants& inv, const std::optional<Rational>& exclusion_bound,
                    std::int64_t d, std::int64_t n);

/// Whether a codimension-delta_codim subvariety with split normal bundle is a
/// complete intersection by the per-type codimension table. Requires
/// delta_codim >= 2; throws DataUnavailable for F4 and G2.
bool homog_split_ci(const VarietyDescriptor& desc, unsigned delta_codim);

/// Generator-count criterion: l >= 7, delta <= (l+1)/4 and
/// (a <= (l+1)/2 - delta or a <= l+1-4 delta). Requires a >= delta_codim.
bool generators_ci(unsigned ell, unsigned delta_codim, unsigned a);

struct RankSplit {
  unsigned e = 0;
  unsigned f = 0;
};

/// With explicit ranks: 3 delta + f + a <= l+1 or 3 delta + e + a <= l+1
/// (requires a == e + f). Without: the generator form with f = delta,
/// (a - delta) <= l+1-5 delta or (a - delta) <= (l+1)/2 - 2 delta (requires a >= delta).
bool hauptlemma_split(unsigned ell, unsigned delta_codim, unsigned a, std::optional<RankSplit> ranks);

}  // namespace cicrit
