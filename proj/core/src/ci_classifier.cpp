#include "cicrit/ci_classifier.hpp"

#include "cicrit/chern_plane.hpp"
#include "cicrit/errors.hpp"

namespace cicrit {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

const char* bool_word(bool b) { return b ? "yes" : "no"; }

bool is_hart_exception(const VarietyDescriptor& desc) {
  // OGr(3;12), OGr(3;13), SGr(3;12)
  if (desc.rank != 6 || desc.node != 3) {
    return false;
  }
  return desc.type == DynkinType::D || desc.type == DynkinType::B || desc.type == DynkinType::C;
}

bool segre_excluded(const VarietyInvariants& inv, std::int64_t d, std::int64_t n) {
  return inv.p_pos.value >= 3 && angle_exclusion(BundleNumerics(d, n), inv.p_pos.value);
}

}  // namespace

std::string to_string(Region region) {
  switch (region) {
    case Region::EmptyBelowExclusion:
      return "EmptyBelowExclusion";
    case Region::CometRegion:
      return "CometRegion";
    case Region::CheckerRegion:
      return "CheckerRegion";
    case Region::HorizLines_e_m_neg:
      return "HorizLines_e_m_neg";
    case Region::Grid_nLow_eNeg:
      return "Grid_nLow_eNeg";
    case Region::VertLines_nLow:
      return "VertLines_nLow";
    case Region::UnknownRegion:
      return "UnknownRegion";
  }
  return "?";
}

std::string to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::HartI:
      return "hart-i";
    case Criterion::HartII:
      return "hart-ii";
    case Criterion::RanI:
      return "ran-i";
    case Criterion::RanII:
      return "ran-ii";
    case Criterion::HomogSplit:
      return "homog-split";
    case Criterion::Generators:
      return "generators";
    case Criterion::DegreeBound:
      return "thmDgt-bound";
    case Criterion::SegrePositivity:
      return "segre-positivity";
  }
  return "?";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CompleteIntersection:
      return "CompleteIntersection";
    case VerdictKind::ExcludedNoSuchSubvariety:
      return "ExcludedNoSuchSubvariety";
    case VerdictKind::Unknown:
      return "Unknown";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Satisfied:
      return "satisfied";
    case Outcome::NotSatisfied:
      return "not-satisfied";
    case Outcome::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

const AppliedCriterion* ClassificationResult::find(Criterion id) const {
  for (const auto& a : applied) {
    if (a.id == id) {
      return &a;
    }
  }
  return nullptr;
}

Region plane_region(const VarietyInvariants& inv, const std::optional<Rational>& exclusion_bound,
                    std::int64_t d, std::int64_t n) {
  const BundleNumerics b(d, n);
  const std::int64_t m = inv.m;
  if (discriminant(b) > 0) {
    if (segre_excluded(inv, d, n)) {
      return Region::EmptyBelowExclusion;
    }
    if (exclusion_bound && Rational(d) <= *exclusion_bound) {
      return Region::CometRegion;
    }
    return Region::CheckerRegion;
  }
  const bool e_m_nonpositive = e_value(b, m) <= 0;
  const bool n_low = n <= 2 * m;
  if (e_m_nonpositive) {
    return n_low ? Region::Grid_nLow_eNeg : Region::HorizLines_e_m_neg;
  }
  return n_low ? Region::VertLines_nLow : Region::UnknownRegion;
}

Classifier::Classifier(const VarietyDescriptor& desc) : desc_(desc), inv_(cicrit::invariants(desc)) {
  if (!inv_.picard_iso) {
    throw PreconditionViolation("Pic(V) -> Pic(X) is not known to be an isomorphism for " + desc.name() +
                                "; the 2-codimensional criteria do not apply");
  }
  if (inv_.m < 1) {
    throw PreconditionViolation("m(V) must be >= 1");
  }
  if (inv_.sp && inv_.p_pos.value >= 2) {
    plain_bound_ = degree_lower_bound(inv_, false);
    sharp_bound_ = degree_lower_bound(inv_, true);
  }
  hart_exception_ = is_hart_exception(desc);
}

std::optional<Rational> Classifier::exclusion_bound() const {
  if (!plain_bound_) {
    return std::nullopt;
  }
  return std::max(*plain_bound_, *sharp_bound_);
}

Region Classifier::region(std::int64_t d, std::int64_t n) const {
  return plane_region(inv_, exclusion_bound(), d, n);
}

ClassificationResult Classifier::classify(std::int64_t d, std::int64_t n, const ClassifyOptions& options) const {
  const BundleNumerics b(d, n);
  const std::int64_t m = inv_.m;
  const std::int64_t ell = desc_.rank;

  ClassificationResult result;
  result.delta = discriminant(b);
  result.region = region(d, n);
  result.notes = inv_.notes;

  std::optional<Criterion> ci;
  std::optional<Criterion> excluded;
  auto record = [&](Criterion id, std::vector<std::pair<std::string, std::string>> inputs, Outcome outcome,
                    std::string detail) {
    result.applied.push_back({id, std::move(inputs), outcome, std::move(detail)});
  };

  // Branches independent of n.
  {
    Outcome o = Outcome::NotApplicable;
    std::string detail = "requires l >= 11";
    if (ell >= 11) {
      o = d <= m * m ? Outcome::Satisfied : Outcome::NotSatisfied;
      detail = "d <= m^2: " + str(d) + " <= " + str(m * m);
    }
    record(Criterion::HartI, {{"l", str(ell)}, {"d", str(d)}, {"m", str(m)}}, o, detail);
    if (o == Outcome::Satisfied && options.use_hart && !ci) {
      ci = Criterion::HartI;
    }
  }
  {
    Outcome o = Outcome::NotApplicable;
    std::string detail = "requires 6 <= l <= 10";
    if (ell >= 6 && ell <= 10 && hart_exception_) {
      detail = desc_.name() + " is excluded from this branch";
    } else if (ell >= 6 && ell <= 10) {
      o = 10 * d <= 3 * m * m ? Outcome::Satisfied : Outcome::NotSatisfied;
      detail = "10 d <= 3 m^2: " + str(10 * d) + " <= " + str(3 * m * m);
      if (ell == 6) {
        result.notes.push_back(
            "hart-ii evaluated at l = 6; this branch is sometimes stated only for 7 <= l <= 10");
      }
    }
    record(Criterion::HartII, {{"l", str(ell)}, {"d", str(d)}, {"m", str(m)}}, o, detail);
    if (o == Outcome::Satisfied && options.use_hart && !ci) {
      ci = Criterion::HartII;
    }
  }

  if (result.delta <= 0) {
    const auto witness = e_nonneg_witness(b);
    const std::string witness_text =
        witness ? "; e(k) >= 0 at k = " + str(*witness) : "; no k in [1, n/2] with e(k) >= 0";
    const bool ran_i = d + m * m <= n * m;
    record(Criterion::RanI, {{"d", str(d)}, {"n", str(n)}, {"m", str(m)}, {"delta", str(result.delta)}},
           ran_i ? Outcome::Satisfied : Outcome::NotSatisfied,
           "d/m + m <= n: " + str(d) + "/" + str(m) + " + " + str(m) + " <= " + str(n) + witness_text);
    const bool ran_ii = n <= 2 * m;
    record(Criterion::RanII, {{"n", str(n)}, {"m", str(m)}, {"delta", str(result.delta)}},
           ran_ii ? Outcome::Satisfied : Outcome::NotSatisfied,
           "n/2 <= m: " + str(n) + "/2 <= " + str(m) + witness_text);
    if (!ci && ran_i) {
      ci = Criterion::RanI;
    } else if (!ci && ran_ii) {
      ci = Criterion::RanII;
    }
  } else {
    record(Criterion::RanI, {{"delta", str(result.delta)}}, Outcome::NotApplicable, "requires Delta <= 0");
    record(Criterion::RanII, {{"delta", str(result.delta)}}, Outcome::NotApplicable, "requires Delta <= 0");
  }

  if (result.delta > 0) {
    // Exclusion order: plain degree bound, Segre positivity, then the sharp bound.
    bool plain_hit = false;
    bool sharp_hit = false;
    if (plain_bound_) {
      plain_hit = Rational(d) <= *plain_bound_;
      sharp_hit = Rational(d) <= *sharp_bound_;
      record(Criterion::DegreeBound,
             {{"d", str(d)},
              {"sp", std::to_string(inv_.sp->value) + (inv_.sp->lower_bound ? " (lower bound)" : "")},
              {"p", std::to_string(inv_.p_pos.value) + (inv_.p_pos.lower_bound ? " (lower bound)" : "")},
              {"plain_bound", plain_bound_->str()},
              {"sharp_bound", sharp_bound_->decimal(6)}},
             plain_hit || sharp_hit ? Outcome::Satisfied : Outcome::NotSatisfied,
             "d <= sp^2 (p-1)^2/240 = " + plain_bound_->decimal(6) + ": " + bool_word(plain_hit) +
                 "; d <= delta_min(sp) (p-1)^2/(4 pi^2) = " + sharp_bound_->decimal(6) + ": " + bool_word(sharp_hit));
    } else {
      record(Criterion::DegreeBound, {{"d", str(d)}}, Outcome::NotApplicable, "sp is not tabulated");
    }
    bool segre_hit = false;
    if (inv_.p_pos.value >= 3) {
      const auto s = segre_numbers(b, inv_.p_pos.value - 2);
      unsigned first_bad = 0;
      for (unsigned j = 1; j < s.size() && first_bad == 0; ++j) {
        if (sgn(s[j]) <= 0) {
          first_bad = j;
        }
      }
      segre_hit = first_bad != 0;
      record(Criterion::SegrePositivity,
             {{"d", str(d)}, {"n", str(n)}, {"p", std::to_string(inv_.p_pos.value)}},
             segre_hit ? Outcome::Satisfied : Outcome::NotSatisfied,
             segre_hit ? "s_" + std::to_string(first_bad) + " = " + s[first_bad].get_str() + " <= 0"
                       : "s_j > 0 for 1 <= j <= p-2");
    }
    if (plain_hit) {
      excluded = Criterion::DegreeBound;
    } else if (segre_hit) {
      excluded = Criterion::SegrePositivity;
    } else if (sharp_hit) {
      excluded = Criterion::DegreeBound;
    }
  } else {
    record(Criterion::DegreeBound, {{"delta", str(result.delta)}}, Outcome::NotApplicable, "requires Delta > 0");
    record(Criterion::SegrePositivity, {{"delta", str(result.delta)}}, Outcome::NotApplicable,
           "requires Delta > 0");
  }

  if (ci) {
    result.verdict = {VerdictKind::CompleteIntersection, ci};
  } else if (excluded) {
    result.verdict = {VerdictKind::ExcludedNoSuchSubvariety, excluded};
  } else {
    result.verdict = {VerdictKind::Unknown, std::nullopt};
  }
  return result;
}

ClassificationResult classify(const VarietyDescriptor& desc, std::int64_t d, std::int64_t n,
                              const ClassifyOptions& options) {
  return Classifier(desc).classify(d, n, options);
}

bool homog_split_ci(const VarietyDescriptor& desc, unsigned delta_codim) {
  desc.validate();
  if (delta_codim < 2) {
    throw PreconditionViolation("homog_split_ci requires codimension >= 2");
  }
  const auto bound = split_codim_bound(desc.type, desc.rank);
  return bound && delta_codim <= *bound;
}

bool generators_ci(unsigned ell, unsigned delta_codim, unsigned a) {
  if (a < delta_codim) {
    throw PreconditionViolation("generators_ci requires a >= delta");
  }
  const long l = ell;
  const long delta = delta_codim;
  const long gens = a;
  if (l < 7 || 4 * delta > l + 1) {
    return false;
  }
  return 2 * gens <= l + 1 - 2 * delta || gens <= l + 1 - 4 * delta;
}

bool hauptlemma_split(unsigned ell, unsigned delta_codim, unsigned a, std::optional<RankSplit> ranks) {
  const long l = ell;
  const long delta = delta_codim;
  const long gens = a;
  if (ranks) {
    if (ranks->e + ranks->f != a) {
      throw PreconditionViolation("hauptlemma_split requires a = e + f");
    }
    const long e = ranks->e;
    const long f = ranks->f;
    return 3 * delta + f + gens <= l + 1 || 3 * delta + e + gens <= l + 1;
  }
  if (a < delta_codim) {
    throw PreconditionViolation("hauptlemma_split requires a >= delta");
  }
  const long relations = gens - delta;
  return relations <= l + 1 - 5 * delta || 2 * relations <= l + 1 - 4 * delta;
}

}  // namespace cicrit
