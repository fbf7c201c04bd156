// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cicrit/chern_plane.hpp"
#include "cicrit/ci_classifier.hpp"
#include "cicrit/discriminant_search.hpp"
#include "cicrit/root_systems.hpp"
#include "cicrit/rr_integrality.hpp"
#include "cli/commands.hpp"
#include "support/oracles.hpp"

namespace {

using namespace cicrit;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
};

struct AcceptanceItem {
  int id;
  std::string title;
  double time_limit_s;  // 0 = untimed
  std::function<Check()> body;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Check ac1_headline() {
  const auto row = delta_min(4);
  Check c;
  c.ok = row.delta_min == 12 && row.witness == DiscriminantWitness{0, 3};
  c.detail = "delta_min(4) = " + std::to_string(row.delta_min);
  return c;
}

Check ac2_table() {
  const DeltaMinTable table = schneider_table(30);
  const auto& frozen = oracle::frozen_delta_min();
  Check c;
  int mismatches = 0;
  bool monotone = true;
  for (unsigned p = 1; p <= 30; ++p) {
    if (table.row(p).delta_min != frozen[p - 1]) ++mismatches;
    if (p > 1 && table.row(p).delta_min < table.row(p - 1).delta_min) monotone = false;
  }
  const bool six = table.row(6).delta_min >= 71;
  c.ok = mismatches == 0 && monotone && six;
  c.detail = "p = 1..30, delta_min(6) = " + std::to_string(table.row(6).delta_min) +
             ", frozen mismatches = " + std::to_string(mismatches) + ", monotone = " + (monotone ? "yes" : "no");
  return c;
}

Check ac3_prop_bound() {
  const auto report = verify_prop_bound(4, 30);
  Check c;
  c.ok = report.all_hold() && report.entries.size() == 27;
  c.detail = "p = 4..30, violations = " + std::to_string(report.violations().size());
  return c;
}

Check ac4_crossover() {
  const unsigned ell = crossover_ell();
  Check c;
  c.ok = ell == 18 && !crossover_holds(17) && crossover_holds(18);
  c.detail = "smallest l = " + std::to_string(ell);
  return c;
}

Check ac5_tables() {
  int checked = 0;
  int mismatches = 0;
  for (DynkinType type : {DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D}) {
    const char letter = to_string(type)[0];
    for (unsigned l = 1; l <= 20; ++l) {
      try {
        validate_type_rank(type, l);
      } catch (const std::exception&) {
        continue;
      }
      for (unsigned k = 1; k <= l; ++k) {
        const VarietyDescriptor desc{type, l, k};
        const auto m = table_m(desc);
        const unsigned index = fano_index(desc);
        ++checked;
        if (!m || static_cast<int>(index) - 3 != *m || variety_dim(desc) != oracle::classical_dim(letter, l, k)) {
          ++mismatches;
        }
      }
    }
  }
  Check c;
  c.ok = mismatches == 0 && checked > 0;
  c.detail = std::to_string(checked) + " descriptors, mismatches = " + std::to_string(mismatches);
  return c;
}

Check ac6_hart_grid() {
  long points = 0;
  long unknown = 0;
  long unknown_without_hart = 0;
  for (unsigned l = 11; l <= 13; ++l) {
    const Classifier classifier(VarietyDescriptor{DynkinType::A, l, 1});
    const std::int64_t m = classifier.invariants().m;
    for (std::int64_t d = 1; d <= m * m; ++d) {
      for (std::int64_t n = 1; n <= 4 * m; ++n) {
        ++points;
        if (classifier.classify(d, n).verdict.kind == VerdictKind::Unknown) ++unknown;
        if (classifier.classify(d, n, {.use_hart = false}).verdict.kind == VerdictKind::Unknown) {
          ++unknown_without_hart;
        }
      }
    }
  }
  Check c;
  c.ok = unknown == 0 && unknown_without_hart == 0;
  c.detail = std::to_string(points) + " points, Unknown = " + std::to_string(unknown) +
             ", Unknown with hart disabled = " + std::to_string(unknown_without_hart);
  return c;
}

Check ac7_properties() {
  std::vector<std::string> failures;

  // (a) finite integrality check against the direct check on k in [-3p, 3p]
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> p_dist(1, 8);
  std::uniform_int_distribution<int> c1_dist(0, 1);
  std::uniform_int_distribution<std::int64_t> d_dist(-100, 100);
  int disagree = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const BundleOnProjSpace bundle(p_dist(rng), c1_dist(rng), d_dist(rng));
    const std::int64_t span = 3 * static_cast<std::int64_t>(bundle.p());
    bool direct = true;
    for (std::int64_t k = -span; k <= span; ++k) direct = direct && euler_char(bundle, k).is_integer();
    if (direct != is_integral_all_twists(bundle)) ++disagree;
  }
  if (disagree) failures.push_back("(a) " + std::to_string(disagree) + " disagreements");

  // (b) Segre recurrence against the symmetric-sum expansion
  int segre_bad = 0;
  for (std::int64_t d = 1; d <= 50; ++d) {
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto s = segre_numbers(BundleNumerics(d, n), 12);
      const auto e = oracle::segre_by_expansion(d, n, 12);
      for (unsigned j = 0; j <= 12; ++j) {
        if (Rational(s[j]) != e[j]) ++segre_bad;
      }
    }
  }
  if (segre_bad) failures.push_back("(b) " + std::to_string(segre_bad) + " mismatches");

  // (c) Delta > 0 implies e(k) > 0, 100 x 100 grid, k over [-2n, 2n]
  int e_bad = 0;
  for (std::int64_t d = 1; d <= 100; ++d) {
    for (std::int64_t n = 1; n <= 100; ++n) {
      const BundleNumerics b(d, n);
      if (discriminant(b) <= 0) continue;
      for (std::int64_t k = -2 * n; k <= 2 * n; ++k) {
        if (e_value(b, k) <= 0) ++e_bad;
      }
    }
  }
  if (e_bad) failures.push_back("(c) " + std::to_string(e_bad) + " non-positive values");

  // (d) integrality on P^p restricts to P^(p-1)
  int nest_bad = 0;
  for (unsigned p = 3; p <= 12; ++p) {
    const TwistIntegralityTable high(p);
    const TwistIntegralityTable low(p - 1);
    for (int c1 = 0; c1 <= 1; ++c1) {
      for (std::int64_t d = -100; d <= 300; ++d) {
        if (high.is_integral(c1, d) && !low.is_integral(c1, d)) ++nest_bad;
      }
    }
  }
  if (nest_bad) failures.push_back("(d) " + std::to_string(nest_bad) + " nesting failures");

  Check c;
  c.ok = failures.empty();
  c.detail = "500 random triples, 2500 Segre sequences, 100x100 grid, p = 3..12";
  for (const auto& f : failures) c.detail += "; " + f;
  return c;
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(CICRIT_TOOL_PATH) + " " + args;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  if (::pclose(pipe) != 0) text += "<nonzero exit>";
  return text;
}

std::string run_in_process(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cicrit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Check ac8_determinism() {
  const std::vector<std::vector<std::string>> invocations{
      {"plot", "A", "11", "1", "--d-max", "200"},
      {"plot", "C", "8", "3"},
      {"deltamin", "30"},
      {"deltamin", "12", "--format", "csv"},
  };
  int differing = 0;
  for (const auto& args : invocations) {
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    const std::string a = run_binary(joined);
    const std::string b = run_binary(joined);
    const std::string c = run_in_process(args);
    if (a.empty() || a != b || a != c || a.find("<nonzero exit>") != std::string::npos) ++differing;
  }
  Check c;
  c.ok = differing == 0;
  c.detail = std::to_string(invocations.size()) + " invocations x 3 runs, differing = " + std::to_string(differing);
  return c;
}

}  // namespace

int main() {
  const std::vector<AcceptanceItem> criteria{
      {1, "delta_min(4) = 12 exactly", 1.0, ac1_headline},
      {2, "delta_min(p) for p = 1..30, delta_min(6) >= 71, monotone", 60.0, ac2_table},
      {3, "delta_min(p) > p^2/6 for p in [4, 30]", 0.0, ac3_prop_bound},
      {4, "crossover rank is 18 (certified)", 0.0, ac4_crossover},
      {5, "classical index - 3 = m and dimension oracle, l <= 20", 30.0, ac5_tables},
      {6, "P^l grid for l = 11..13 never Unknown", 10.0, ac6_hart_grid},
      {7, "property suites (a)-(d)", 0.0, ac7_properties},
      {8, "plot and deltamin byte-identical across runs", 0.0, ac8_determinism},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Check check;
    try {
      check = criterion.body();
    } catch (const std::exception& e) {
      check = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_time = criterion.time_limit_s == 0.0 || elapsed < criterion.time_limit_s;
    const bool pass = check.ok && in_time;
    if (!pass) ++failures;
    char timing[96];
    if (criterion.time_limit_s > 0.0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", elapsed, criterion.time_limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    }
    std::cout << "AC" << criterion.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << criterion.title << "  ["
              << check.detail << "; " << timing << "]\n";
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
