#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "cicrit/discriminant_search.hpp"
#include "cicrit/rr_integrality.hpp"

namespace cicrit {

namespace {

constexpr const char* kHeader = "p,delta_min,c1,d,checksum";

// FNV-1a over the row parameters and the schema string.
std::uint64_t row_checksum(const DeltaMinRow& row) {
  std::ostringstream key;
  key << kDeltaMinCacheSchema << '|' << row.p << '|' << row.delta_min << '|' << row.witness.c1 << '|'
      << row.witness.d;
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char ch : key.str()) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

template <typename T>
bool parse_field(const std::string& text, T& out, int base = 10) {
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out, base);
  return ec == std::errc() && ptr == last;
}

std::optional<DeltaMinRow> parse_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string field; std::getline(ss, field, ',');) {
    fields.push_back(field);
  }
  if (fields.size() != 5) {
    return std::nullopt;
  }
  DeltaMinRow row;
  std::uint64_t checksum = 0;
  if (!parse_field(fields[0], row.p) || !parse_field(fields[1], row.delta_min) ||
      !parse_field(fields[2], row.witness.c1) || !parse_field(fields[3], row.witness.d) ||
      !parse_field(fields[4], checksum, 16)) {
    return std::nullopt;
  }
  if (checksum != row_checksum(row)) {
    return std::nullopt;
  }
  return row;
}

}  // namespace

std::string format_delta_min_cache(const DeltaMinTable& table) {
  std::ostringstream out;
  out << "# " << kDeltaMinCacheSchema << '\n' << kHeader << '\n';
  for (const auto& row : table.rows) {
    out << row.p << ',' << row.delta_min << ',' << row.witness.c1 << ',' << row.witness.d << ','
        << hex64(row_checksum(row)) << '\n';
  }
  return out.str();
}

std::optional<DeltaMinTable> parse_delta_min_cache(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != std::string("# ") + kDeltaMinCacheSchema) {
    return std::nullopt;
  }
  if (!std::getline(in, line) || line != kHeader) {
    return std::nullopt;
  }
  DeltaMinTable table;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto row = parse_row(line);
    if (!row || row->p != table.rows.size() + 1) {
      return std::nullopt;
    }
    const auto expected = witness_for_discriminant(row->delta_min);
    if (row->delta_min <= 0 || !expected || *expected != row->witness ||
        !TwistIntegralityTable(row->p).is_integral(row->witness.c1, row->witness.d)) {
      return std::nullopt;
    }
    table.rows.push_back(*row);
  }
  return table;
}

std::optional<DeltaMinTable> load_delta_min_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_delta_min_cache(buffer.str());
}

void store_delta_min_cache(const std::filesystem::path& path, const DeltaMinTable& table) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    out << format_delta_min_cache(table);
    if (!out.flush()) {
      throw std::runtime_error("failed writing cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

DeltaMinTable delta_min_table_cached(const std::filesystem::path& path, unsigned p_max) {
  if (auto cached = load_delta_min_cache(path); cached && cached->rows.size() >= p_max) {
    cached->rows.resize(p_max);
    return *cached;
  }
  DeltaMinTable table = schneider_table(p_max);
  store_delta_min_cache(path, table);
  return table;
}

}  // namespace cicrit
