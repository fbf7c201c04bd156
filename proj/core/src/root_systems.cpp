#include "cicrit/root_systems.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "cicrit/errors.hpp"

namespace cicrit {

namespace {

struct DynkinGraph {
  std::vector<int> length;                  // relative squared length of each simple root
  std::vector<std::pair<int, int>> edges;  // 0-based node pairs
};

DynkinGraph chain(unsigned n) {
  DynkinGraph g;
  g.length.assign(n, 1);
  for (unsigned i = 0; i + 1 < n; ++i) {
    g.edges.emplace_back(i, i + 1);
  }
  return g;
}

DynkinGraph exceptional_e(unsigned n) {
  DynkinGraph g;
  g.length.assign(n, 1);
  g.edges = {{0, 2}, {1, 3}, {2, 3}};
  for (unsigned i = 3; i + 1 < n; ++i) {
    g.edges.emplace_back(i, i + 1);
  }
  return g;
}

DynkinGraph dynkin_graph(DynkinType type, unsigned rank) {
  switch (type) {
    case DynkinType::A:
      return chain(rank);
    case DynkinType::B: {
      DynkinGraph g = chain(rank);
      std::fill(g.length.begin(), g.length.end() - 1, 2);
      return g;
    }
    case DynkinType::C: {
      DynkinGraph g = chain(rank);
      g.length.back() = 2;
      return g;
    }
    case DynkinType::D: {
      DynkinGraph g = chain(rank - 1);
      g.length.push_back(1);
      g.edges.emplace_back(rank - 3, rank - 1);
      return g;
    }
    case DynkinType::E6:
      return exceptional_e(6);
    case DynkinType::E7:
      return exceptional_e(7);
    case DynkinType::E8:
      return exceptional_e(8);
    case DynkinType::F4: {
      DynkinGraph g = chain(4);
      g.length = {2, 2, 1, 1};
      return g;
    }
    case DynkinType::G2: {
      DynkinGraph g = chain(2);
      g.length = {1, 3};
      return g;
    }
  }
  throw PreconditionViolation("unknown Dynkin type");
}

unsigned fixed_rank(DynkinType type) {
  switch (type) {
    case DynkinType::E6:
      return 6;
    case DynkinType::E7:
      return 7;
    case DynkinType::E8:
      return 8;
    case DynkinType::F4:
      return 4;
    case DynkinType::G2:
      return 2;
    default:
      return 0;
  }
}

unsigned min_rank(DynkinType type) {
  switch (type) {
    case DynkinType::A:
      return 1;
    case DynkinType::B:
      return 2;
    case DynkinType::C:
      return 3;
    case DynkinType::D:
      return 4;
    default:
      return fixed_rank(type);
  }
}

int pairing_with_coroot(const Root& beta, const std::vector<std::vector<int>>& cartan, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    s += beta[j] * cartan[i][j];
  }
  return s;
}

std::vector<Root> roots_on_node(const VarietyDescriptor& desc) {
  desc.validate();
  std::vector<Root> out;
  for (auto& beta : positive_roots(desc.type, desc.rank)) {
    if (beta[desc.node - 1] > 0) {
      out.push_back(std::move(beta));
    }
  }
  return out;
}

}  // namespace

std::string to_string(DynkinType type) {
  switch (type) {
    case DynkinType::A:
      return "A";
    case DynkinType::B:
      return "B";
    case DynkinType::C:
      return "C";
    case DynkinType::D:
      return "D";
    case DynkinType::E6:
      return "E6";
    case DynkinType::E7:
      return "E7";
    case DynkinType::E8:
      return "E8";
    case DynkinType::F4:
      return "F4";
    case DynkinType::G2:
      return "G2";
  }
  return "?";
}

DynkinType parse_dynkin_type(std::string_view name, unsigned rank) {
  static const std::map<std::string, DynkinType, std::less<>> explicit_names{
      {"E6", DynkinType::E6}, {"E7", DynkinType::E7}, {"E8", DynkinType::E8},
      {"F4", DynkinType::F4}, {"G2", DynkinType::G2}};
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  DynkinType type;
  if (const auto it = explicit_names.find(upper); it != explicit_names.end()) {
    type = it->second;
  } else if (upper == "A") {
    type = DynkinType::A;
  } else if (upper == "B") {
    type = DynkinType::B;
  } else if (upper == "C") {
    type = DynkinType::C;
  } else if (upper == "D") {
    type = DynkinType::D;
  } else if (upper == "E" && rank >= 6 && rank <= 8) {
    type = rank == 6 ? DynkinType::E6 : (rank == 7 ? DynkinType::E7 : DynkinType::E8);
  } else if (upper == "F") {
    type = DynkinType::F4;
  } else if (upper == "G") {
    type = DynkinType::G2;
  } else {
    throw PreconditionViolation("unknown Dynkin type '" + std::string(name) + "' of rank " +
                                std::to_string(rank));
  }
  validate_type_rank(type, rank);
  return type;
}

bool is_classical(DynkinType type) {
  return type == DynkinType::A || type == DynkinType::B || type == DynkinType::C || type == DynkinType::D;
}

void validate_type_rank(DynkinType type, unsigned rank) {
  if (const unsigned fixed = fixed_rank(type); fixed != 0) {
    if (rank != fixed) {
      throw PreconditionViolation(to_string(type) + " has rank " + std::to_string(fixed));
    }
    return;
  }
  if (rank < min_rank(type)) {
    throw PreconditionViolation(to_string(type) + " requires rank >= " + std::to_string(min_rank(type)));
  }
}

void VarietyDescriptor::validate() const {
  validate_type_rank(type, rank);
  if (node < 1 || node > rank) {
    throw PreconditionViolation("node must lie in 1.." + std::to_string(rank));
  }
}

std::string VarietyDescriptor::name() const {
  const std::string k = std::to_string(node);
  const std::string l = std::to_string(rank);
  switch (type) {
    case DynkinType::A:
      return node == 1 || node == rank ? "P^" + l : "Gr(" + k + ";" + std::to_string(rank + 1) + ")";
    case DynkinType::B:
      return "OGr(" + k + ";" + std::to_string(2 * rank + 1) + ")";
    case DynkinType::C:
      return "SGr(" + k + ";" + std::to_string(2 * rank) + ")";
    case DynkinType::D:
      return "OGr(" + (node + 1 >= rank ? l : k) + ";" + std::to_string(2 * rank) + ")";
    default:
      return to_string(type) + "/P" + k;
  }
}

std::vector<std::vector<int>> cartan_matrix(DynkinType type, unsigned rank) {
  validate_type_rank(type, rank);
  const DynkinGraph g = dynkin_graph(type, rank);
  const std::size_t n = g.length.size();
  // Gram matrix scaled by 2: (a_i, a_i) = 2 len_i, (a_i, a_j) = -max(len_i, len_j) on edges.
  std::vector<std::vector<int>> gram(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    gram[i][i] = 2 * g.length[i];
  }
  for (const auto& [a, b] : g.edges) {
    const int v = -std::max(g.length[a], g.length[b]);
    gram[a][b] = gram[b][a] = v;
  }
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cartan[i][j] = 2 * gram[i][j] / gram[i][i];
    }
  }
  return cartan;
}

std::vector<Root> positive_roots(DynkinType type, unsigned rank) {
  const auto cartan = cartan_matrix(type, rank);
  const std::size_t n = cartan.size();
  std::set<Root> known;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Root simple(n, 0);
    simple[i] = 1;
    known.insert(simple);
    layer.push_back(simple);
  }
  // Root strings: for beta != alpha_i the alpha_i-string beta - r a_i .. beta + q a_i
  // satisfies r - q = <beta, alpha_i^vee>; r is read off the lower layers.
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int r = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) {
            break;
          }
          ++r;
        }
        const int q = r - pairing_with_coroot(beta, cartan, i);
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          next.insert(std::move(up));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  std::vector<Root> roots(known.begin(), known.end());
  std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return roots;
}

unsigned variety_dim(const VarietyDescriptor& desc) {
  return static_cast<unsigned>(roots_on_node(desc).size());
}

unsigned fano_index(const VarietyDescriptor& desc) {
  const auto cartan = cartan_matrix(desc.type, desc.rank);
  int total = 0;
  for (const Root& beta : roots_on_node(desc)) {
    total += pairing_with_coroot(beta, cartan, desc.node - 1);
  }
  return static_cast<unsigned>(total);
}

unsigned positive_root_count(DynkinType type, unsigned rank) {
  validate_type_rank(type, rank);
  switch (type) {
    case DynkinType::A:
      return rank * (rank + 1) / 2;
    case DynkinType::B:
    case DynkinType::C:
      return rank * rank;
    case DynkinType::D:
      return rank * (rank - 1);
    case DynkinType::E6:
      return 36;
    case DynkinType::E7:
      return 63;
    case DynkinType::E8:
      return 120;
    case DynkinType::F4:
      return 24;
    case DynkinType::G2:
      return 6;
  }
  return 0;
}

std::optional<int> table_m(const VarietyDescriptor& desc) {
  desc.validate();
  const int l = static_cast<int>(desc.rank);
  const int k = static_cast<int>(desc.node);
  switch (desc.type) {
    case DynkinType::A:
      return l - 2;
    case DynkinType::B:
      return k == l ? 2 * l - 3 : 2 * l - k - 3;
    case DynkinType::C:
      return 2 * l - k - 2;
    case DynkinType::D:
      return k >= l - 1 ? 2 * l - 5 : 2 * l - k - 4;
    default:
      return std::nullopt;
  }
}

std::optional<unsigned> picard_iso_min_rank(DynkinType type) {
  switch (type) {
    case DynkinType::A:
    case DynkinType::C:
      return 6;
    case DynkinType::B:
      return 4;
    case DynkinType::D:
      return 5;
    case DynkinType::E6:
    case DynkinType::E7:
    case DynkinType::E8:
    case DynkinType::F4:
      return fixed_rank(type);
    case DynkinType::G2:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<unsigned> split_codim_bound(DynkinType type, unsigned rank) {
  validate_type_rank(type, rank);
  switch (type) {
    case DynkinType::A:
    case DynkinType::C:
      return rank >= 6 ? std::optional<unsigned>((rank + 1) / 3) : std::nullopt;
    case DynkinType::B:
    case DynkinType::D:
      return rank >= 5 ? std::optional<unsigned>((rank + 1) / 3) : std::nullopt;
    case DynkinType::E6:
    case DynkinType::E7:
      return 2U;
    case DynkinType::E8:
      return 3U;
    case DynkinType::F4:
    case DynkinType::G2:
      break;
  }
  throw DataUnavailable("no split-codimension row for " + to_string(type));
}

VarietyInvariants invariants(const VarietyDescriptor& desc) {
  desc.validate();
  if (desc.type == DynkinType::G2) {
    throw DataUnavailable("data unavailable: no table entries for G2");
  }
  const unsigned l = desc.rank;
  const unsigned k = desc.node;

  VarietyInvariants inv;
  inv.dim_v = variety_dim(desc);
  inv.index = fano_index(desc);
  inv.m = static_cast<int>(inv.index) - 3;
  inv.picard_iso = l >= *picard_iso_min_rank(desc.type);
  inv.codim_bound = desc.type == DynkinType::F4 ? std::nullopt : split_codim_bound(desc.type, l);

  switch (desc.type) {
    case DynkinType::A:
      inv.p_pos = {l, false};
      inv.sp = TableValue{std::max(k, l - k + 1), false};
      break;
    case DynkinType::B:
      inv.p_pos = {k == l ? 2 * l - 1 : 2 * l - 2, false};
      inv.sp = TableValue{k == l ? l - 1 : std::max(k, l - k), false};
      break;
    case DynkinType::C:
      inv.p_pos = {2 * l - k, false};
      if (k == l) {
        inv.sp = TableValue{l - 1, false};
      } else if (k == 1) {
        // The symplectic column starts at k = 2; max(k, l-k) is only a lower bound here.
        inv.sp = TableValue{std::max(k, l - k), true};
        inv.notes.push_back("sp for SGr(1;2l) is outside the tabulated range; max(k,l-k) used as a lower bound");
      } else {
        inv.sp = TableValue{std::max(k, l - k), false};
      }
      break;
    case DynkinType::D:
      inv.p_pos = {2 * l - 3, false};
      inv.sp = TableValue{k + 1 >= l ? l - 1 : std::max(k, l - k), false};
      inv.notes.push_back("p(V) = 2l-3 is stored for every D node (one merged table cell)");
      break;
    case DynkinType::E6:
      inv.p_pos = {11, false};
      inv.sp = TableValue{3, true};
      break;
    case DynkinType::E7:
      inv.p_pos = {17, false};
      inv.sp = TableValue{4, true};
      break;
    case DynkinType::E8:
      inv.p_pos = {29, false};
      inv.sp = TableValue{4, true};
      break;
    case DynkinType::F4:
      inv.p_pos = {8, true};
      inv.sp = std::nullopt;
      inv.notes.push_back("p(F4/P) is tabulated as 8,9,10 without a node map; 8 used as a lower bound");
      inv.notes.push_back("sp for F4 is not tabulated");
      break;
    case DynkinType::G2:
      break;
  }
  return inv;
}

}  // namespace cicrit
