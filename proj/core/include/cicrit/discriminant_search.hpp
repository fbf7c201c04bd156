#pragma once

// Minimal positive discriminant of Schwartzenberger-integral rank-2 Chern data
// on P^p, found by scanning Delta = 3, 4, 7, 8, 11, 12, ... in increasing order.
//
// These minima use integrality alone. Any extra restriction (stability of the
// bundle, say) that a published table may have applied is not modelled.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cicrit/exact_arith.hpp"

namespace cicrit {

struct DiscriminantWitness {
  int c1 = 0;
  std::int64_t d = 0;
  friend bool operator==(const DiscriminantWitness&, const DiscriminantWitness&) = default;
};

struct SchwartzenbergerRecord {
  unsigned p = 0;
  int c1 = 0;
  std::int64_t d = 0;
  std::int64_t delta = 0;  // 4d - c1^2
  bool integral = false;
};

struct DeltaMinRow {
  unsigned p = 0;
  std::int64_t delta_min = 0;
  DiscriminantWitness witness;
  friend bool operator==(const DeltaMinRow&, const DeltaMinRow&) = default;
};

struct DeltaMinTable {
  std::vector<DeltaMinRow> rows;  // p = 1..p_max in order
  const DeltaMinRow& row(unsigned p) const;
  friend bool operator==(const DeltaMinTable&, const DeltaMinTable&) = default;
};

/// Normalized Chern data for a discriminant: Delta = 0 mod 4 -> (0, Delta/4),
/// Delta = 3 mod 4 -> (1, (Delta+1)/4), anything else -> nullopt.
std::optional<DiscriminantWitness> witness_for_discriminant(std::int64_t delta);

SchwartzenbergerRecord schwartzenberger_record(unsigned p, int c1, std::int64_t d);

/// Smallest positive integral discriminant on P^p. Throws PreconditionViolation for p == 0.
DeltaMinRow delta_min(unsigned p);

/// Process-wide memoized delta_min; thread-safe.
std::int64_t delta_min_value(unsigned p);

/// Rows for p = 1..p_max, searched concurrently. Throws std::logic_error if the
/// rows fail to be non-decreasing in p.
DeltaMinTable schneider_table(unsigned p_max);

struct PropBoundEntry {
  unsigned p = 0;
  std::int64_t delta_min = 0;
  Rational bound;   // p^2 / 6
  Rational margin;  // delta_min - bound
  bool holds = false;
};

struct PropBoundReport {
  std::vector<PropBoundEntry> entries;
  bool all_hold() const;
  std::vector<PropBoundEntry> violations() const;
};

/// Checks delta_min(p) > p^2/6 for p in [p_from, p_to]; requires 4 <= p_from <= p_to.
PropBoundReport verify_prop_bound(unsigned p_from, unsigned p_to);
PropBoundReport verify_prop_bound(const DeltaMinTable& table, unsigned p_from, unsigned p_to);

/// Certified decision of l^2 (l-1)^2 / (24 pi^2) > (l-1)(l+5).
bool crossover_holds(unsigned ell);

/// Smallest l for which crossover_holds is true.
unsigned crossover_ell();

// ---- versioned cache file ----

inline constexpr const char* kDeltaMinCacheSchema = "cicrit-deltamin-cache/1";

/// Serialized cache text: schema line, header, one row per p with a checksum.
std::string format_delta_min_cache(const DeltaMinTable& table);

/// Parses cache text; nullopt on schema mismatch, malformed rows, bad checksums
/// or witnesses that fail the integrality test.
std::optional<DeltaMinTable> parse_delta_min_cache(const std::string& text);

std::optional<DeltaMinTable> load_delta_min_cache(const std::filesystem::path& path);

/// Writes via a temporary file and an atomic rename.
void store_delta_min_cache(const std::filesystem::path& path, const DeltaMinTable& table);

/// Uses cached rows when the cache covers 1..p_max, else recomputes and rewrites it.
DeltaMinTable delta_min_table_cached(const std::filesystem::path& path, unsigned p_max);

}  // namespace cicrit
