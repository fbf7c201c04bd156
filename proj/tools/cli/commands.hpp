#pragma once

// Command implementations behind the `cicrit` executable. Each command returns
// its full stdout text and exit code so tests can drive it in-process.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "cicrit/root_systems.hpp"

namespace cicrit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "cicrit/1";
inline constexpr const char* kCacheEnvVar = "CI_CRITERIA_CACHE";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDataUnavailable = 2,
  kExitAssertionFailure = 3,
};

enum class Format { Json, Csv, Plain };

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;  // stdout payload
  std::string err;  // diagnostics for stderr
};

Json make_envelope(const std::string& command, Json inputs, Json result, const std::vector<std::string>& notes);

CommandOutput cmd_variety(const VarietyDescriptor& desc, Format format);
CommandOutput cmd_classify(const VarietyDescriptor& desc, std::int64_t d, std::int64_t n, Format format);
CommandOutput cmd_deltamin(unsigned p_max, const std::optional<std::filesystem::path>& cache, Format format);

struct VerifyRequest {
  std::optional<std::pair<unsigned, unsigned>> prop_sch;
  bool crossover = false;
  std::optional<unsigned> tables_rank_max;
};
CommandOutput cmd_verify(const VerifyRequest& request, Format format);

/// Writes to `out_file` when given, else returns the SVG as stdout text.
CommandOutput cmd_plot(const VarietyDescriptor& desc, std::optional<std::int64_t> d_max,
                       const std::optional<std::filesystem::path>& out_file);

/// Deterministic SVG of the (d, n)-plane for one variety. Throws DataUnavailable
/// when m, p or sp are missing.
std::string render_plane_svg(const VarietyDescriptor& desc, std::optional<std::int64_t> d_max);

/// Closed-form dim G/P for the classical families (used by `verify --tables`).
unsigned classical_dim_formula(const VarietyDescriptor& desc);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cicrit::cli
