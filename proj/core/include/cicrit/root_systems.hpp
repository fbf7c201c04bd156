#pragma once

// Root data of the simple Lie algebras and invariants of G/P for a maximal
// parabolic P, in Bourbaki numbering:
//
//   A_l  1 - 2 - ... - l
//   B_l  1 - 2 - ... - (l-1) => l        (alpha_l short)
//   C_l  1 - 2 - ... - (l-1) <= l        (alpha_l long)
//   D_l  1 - 2 - ... - (l-2) < (l-1), l  (l-1 and l both attached to l-2)
//   E_n  1 - 3 - 4 - 5 - ... - n,  2 attached to 4
//   F_4  1 - 2 => 3 - 4                   (alpha_1, alpha_2 long)
//   G_2  1 <= 2                           (alpha_1 short)
//
// Marking node k of A_l gives Gr(k; l+1); of B_l, OGr(k; 2l+1); of C_l,
// SGr(k; 2l); of D_l (k <= l-2), OGr(k; 2l), and the spinor varieties at l-1, l.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cicrit {

enum class DynkinType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(DynkinType type);

/// Accepts "A".."G" (E/F/G resolved by rank) or the explicit "E6", "E7", "E8", "F4", "G2".
/// Throws PreconditionViolation on unknown names or a rank that contradicts the name.
DynkinType parse_dynkin_type(std::string_view name, unsigned rank);

bool is_classical(DynkinType type);

struct VarietyDescriptor {
  DynkinType type = DynkinType::A;
  unsigned rank = 1;
  unsigned node = 1;

  /// Throws PreconditionViolation on an invalid rank or node.
  void validate() const;
  /// Human name such as "P^11", "Gr(2;7)", "OGr(3;13)", "E7/P7".
  std::string name() const;
  friend bool operator==(const VarietyDescriptor&, const VarietyDescriptor&) = default;
};

void validate_type_rank(DynkinType type, unsigned rank);

using Root = std::vector<int>;  // coefficients over the simple roots

/// cartan[i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> cartan_matrix(DynkinType type, unsigned rank);

/// All positive roots, sorted by height then lexicographically.
std::vector<Root> positive_roots(DynkinType type, unsigned rank);

/// dim G/P = number of positive roots with a positive coefficient on the marked node.
unsigned variety_dim(const VarietyDescriptor& desc);

/// c1(G/P) . l, i.e. the pairing of the sum of those roots with the marked coroot.
unsigned fano_index(const VarietyDescriptor& desc);

/// A stored table value; lower_bound marks entries only known from below.
struct TableValue {
  unsigned value = 0;
  bool lower_bound = false;
  friend bool operator==(const TableValue&, const TableValue&) = default;
};

struct VarietyInvariants {
  unsigned dim_v = 0;
  unsigned index = 0;
  int m = 0;  // index - 3
  TableValue p_pos;
  std::optional<TableValue> sp;  // absent where the tables give nothing (F4)
  bool picard_iso = false;
  std::optional<unsigned> codim_bound;  // absent below the rank floor or with no row
  std::vector<std::string> notes;
};

/// Throws DataUnavailable for G2 (no table row).
VarietyInvariants invariants(const VarietyDescriptor& desc);

/// m(V) from the closed-form classical table (l-2, 2l-k-3, ...); nullopt for exceptional types.
std::optional<int> table_m(const VarietyDescriptor& desc);

/// Rank threshold from which Pic(V) -> Pic(X) is an isomorphism; nullopt when no row exists.
std::optional<unsigned> picard_iso_min_rank(DynkinType type);

/// Codimension bound for split-normal-bundle subvarieties; throws DataUnavailable for F4, G2.
std::optional<unsigned> split_codim_bound(DynkinType type, unsigned rank);

/// Number of positive roots by the classical formulas.
unsigned positive_root_count(DynkinType type, unsigned rank);

}  // namespace cicrit
