#include "cicrit/discriminant_search.hpp"

#include <future>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cicrit/errors.hpp"
#include "cicrit/interval.hpp"
#include "cicrit/rr_integrality.hpp"

namespace cicrit {

const DeltaMinRow& DeltaMinTable::row(unsigned p) const {
  if (p < 1 || p > rows.size()) {
    throw PreconditionViolation("DeltaMinTable has no row for p = " + std::to_string(p));
  }
  return rows[p - 1];
}

std::optional<DiscriminantWitness> witness_for_discriminant(std::int64_t delta) {
  const std::int64_t residue = ((delta % 4) + 4) % 4;
  if (residue == 0) {
    return DiscriminantWitness{0, delta / 4};
  }
  if (residue == 3) {
    return DiscriminantWitness{1, (delta + 1) / 4};
  }
  return std::nullopt;
}

SchwartzenbergerRecord schwartzenberger_record(unsigned p, int c1, std::int64_t d) {
  const BundleOnProjSpace bundle(p, c1, d);
  return {p, c1, d, bundle.discriminant(), is_integral_all_twists(bundle)};
}

DeltaMinRow delta_min(unsigned p) {
  if (p < 1) {
    throw PreconditionViolation("delta_min requires p >= 1");
  }
  const TwistIntegralityTable table(p);
  // Terminates: (c1, d) = (0, p!) is integral since every power sum past p_1
  // is a multiple of d.
  for (std::int64_t delta = 3;; ++delta) {
    const auto witness = witness_for_discriminant(delta);
    if (witness && table.is_integral(witness->c1, witness->d)) {
      return {p, delta, *witness};
    }
  }
}

std::int64_t delta_min_value(unsigned p) {
  static std::mutex mutex;
  static std::map<unsigned, std::int64_t> memo;
  {
    const std::lock_guard lock(mutex);
    if (const auto it = memo.find(p); it != memo.end()) {
      return it->second;
    }
  }
  const std::int64_t value = delta_min(p).delta_min;
  const std::lock_guard lock(mutex);
  memo.emplace(p, value);
  return value;
}

DeltaMinTable schneider_table(unsigned p_max) {
  if (p_max < 1) {
    throw PreconditionViolation("schneider_table requires p_max >= 1");
  }
  std::vector<std::future<DeltaMinRow>> pending;
  pending.reserve(p_max);
  for (unsigned p = 1; p <= p_max; ++p) {
    pending.push_back(std::async(std::launch::async, [p] { return delta_min(p); }));
  }
  DeltaMinTable table;
  table.rows.reserve(p_max);
  for (auto& f : pending) {
    table.rows.push_back(f.get());
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i].delta_min < table.rows[i - 1].delta_min) {
      throw std::logic_error("delta_min decreased from p = " + std::to_string(i) + " to p = " +
                             std::to_string(i + 1));
    }
  }
  return table;
}

bool PropBoundReport::all_hold() const {
  for (const auto& e : entries) {
    if (!e.holds) {
      return false;
    }
  }
  return true;
}

std::vector<PropBoundEntry> PropBoundReport::violations() const {
  std::vector<PropBoundEntry> out;
  for (const auto& e : entries) {
    if (!e.holds) {
      out.push_back(e);
    }
  }
  return out;
}

PropBoundReport verify_prop_bound(const DeltaMinTable& table, unsigned p_from, unsigned p_to) {
  if (p_from < 4 || p_from > p_to) {
    throw PreconditionViolation("verify_prop_bound requires 4 <= p_from <= p_to");
  }
  PropBoundReport report;
  for (unsigned p = p_from; p <= p_to; ++p) {
    PropBoundEntry entry;
    entry.p = p;
    entry.delta_min = table.row(p).delta_min;
    entry.bound = Rational(Integer(p * p), Integer(6));
    entry.margin = Rational(entry.delta_min) - entry.bound;
    entry.holds = entry.margin.sign() > 0;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

PropBoundReport verify_prop_bound(unsigned p_from, unsigned p_to) {
  if (p_from < 4 || p_from > p_to) {
    throw PreconditionViolation("verify_prop_bound requires 4 <= p_from <= p_to");
  }
  return verify_prop_bound(schneider_table(p_to), p_from, p_to);
}

bool crossover_holds(unsigned ell) {
  const Rational l(ell);
  const Rational lhs_numerator = l.pow(2) * (l - 1).pow(2);
  const RationalInterval lhs =
      RationalInterval(lhs_numerator) / (RationalInterval(Rational(24)) * pi_interval().pow(2));
  return certainly_greater(lhs, (l - 1) * (l + 5));
}

unsigned crossover_ell() {
  constexpr unsigned kSearchLimit = 10000;
  for (unsigned ell = 1; ell <= kSearchLimit; ++ell) {
    if (crossover_holds(ell)) {
      return ell;
    }
  }
  throw std::logic_error("crossover_ell: no crossover below search limit");
}

}  // namespace cicrit
