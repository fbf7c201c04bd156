#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cicrit/chern_plane.hpp"
#include "cicrit/ci_classifier.hpp"
#include "cicrit/discriminant_search.hpp"
#include "cicrit/errors.hpp"

namespace cicrit::cli {

namespace {

Json descriptor_json(const VarietyDescriptor& desc) {
  return Json{{"type", to_string(desc.type)}, {"rank", desc.rank}, {"node", desc.node}};
}

Json table_value_json(const TableValue& v) { return Json{{"value", v.value}, {"lower_bound", v.lower_bound}}; }

Json rational_json(const Rational& r) { return Json{{"exact", r.str()}, {"decimal", r.decimal(6)}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

CommandOutput failure(int code, const std::string& message) { return {code, "", message + "\n"}; }

}  // namespace

Json make_envelope(const std::string& command, Json inputs, Json result, const std::vector<std::string>& notes) {
  Json env;
  env["schema_version"] = kSchemaVersion;
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["notes"] = notes;
  return env;
}

// ---- variety ----

CommandOutput cmd_variety(const VarietyDescriptor& desc, Format format) {
  VarietyInvariants inv;
  try {
    inv = invariants(desc);
  } catch (const DataUnavailable& e) {
    return failure(kExitDataUnavailable, e.what());
  }
  Json result{{"variety", desc.name()},
              {"dim", inv.dim_v},
              {"index", inv.index},
              {"m", inv.m},
              {"p", table_value_json(inv.p_pos)},
              {"sp", inv.sp ? table_value_json(*inv.sp) : Json(nullptr)},
              {"picard_iso", inv.picard_iso},
              {"codim_bound", inv.codim_bound ? Json(*inv.codim_bound) : Json(nullptr)}};
  const std::string sp_text = inv.sp ? std::to_string(inv.sp->value) : "";
  const std::string codim_text = inv.codim_bound ? std::to_string(*inv.codim_bound) : "";

  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << dump(make_envelope("variety", descriptor_json(desc), result, inv.notes));
      break;
    case Format::Csv:
      out << "schema,type,rank,node,variety,dim,index,m,p,p_lower_bound,sp,sp_lower_bound,picard_iso,codim_bound\n"
          << "cicrit-variety-csv/1," << to_string(desc.type) << ',' << desc.rank << ',' << desc.node << ','
          << csv_escape(desc.name()) << ',' << inv.dim_v << ',' << inv.index << ',' << inv.m << ','
          << inv.p_pos.value << ',' << bool_text(inv.p_pos.lower_bound) << ',' << sp_text << ','
          << (inv.sp ? bool_text(inv.sp->lower_bound) : "") << ',' << bool_text(inv.picard_iso) << ','
          << codim_text << '\n';
      break;
    case Format::Plain:
      out << "variety=" << desc.name() << '\n'
          << "dim=" << inv.dim_v << '\n'
          << "index=" << inv.index << '\n'
          << "m=" << inv.m << '\n'
          << "p=" << inv.p_pos.value << (inv.p_pos.lower_bound ? " (lower bound)" : "") << '\n'
          << "sp=" << (inv.sp ? sp_text + (inv.sp->lower_bound ? " (lower bound)" : "") : "n/a") << '\n'
          << "picard_iso=" << bool_text(inv.picard_iso) << '\n'
          << "codim_bound=" << (inv.codim_bound ? codim_text : "n/a") << '\n';
      for (const auto& note : inv.notes) {
        out << "note: " << note << '\n';
      }
      break;
  }
  return {kExitOk, out.str(), ""};
}

// ---- classify ----

CommandOutput cmd_classify(const VarietyDescriptor& desc, std::int64_t d, std::int64_t n, Format format) {
  if (d < 1 || n < 1) {
    return failure(kExitUsage, "classify: d and n must be positive");
  }
  std::optional<Classifier> classifier;
  try {
    classifier.emplace(desc);
  } catch (const DataUnavailable& e) {
    return failure(kExitDataUnavailable, e.what());
  } catch (const PreconditionViolation& e) {
    return failure(kExitDataUnavailable, e.what());
  }
  const ClassificationResult r = classifier->classify(d, n);
  const std::string criterion = r.verdict.criterion ? to_string(*r.verdict.criterion) : "";

  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json applied = Json::array();
      for (const auto& a : r.applied) {
        Json inputs = Json::object();
        for (const auto& [k, v] : a.inputs) {
          inputs[k] = v;
        }
        applied.push_back(
            Json{{"id", to_string(a.id)}, {"outcome", to_string(a.outcome)}, {"inputs", inputs}, {"detail", a.detail}});
      }
      const auto& inv = classifier->invariants();
      Json result{{"variety", desc.name()},
                  {"m", inv.m},
                  {"p", table_value_json(inv.p_pos)},
                  {"sp", inv.sp ? table_value_json(*inv.sp) : Json(nullptr)},
                  {"delta", r.delta},
                  {"region", to_string(r.region)},
                  {"verdict", Json{{"kind", to_string(r.verdict.kind)},
                                   {"criterion", criterion.empty() ? Json(nullptr) : Json(criterion)}}},
                  {"applied", applied}};
      if (const auto bound = classifier->exclusion_bound()) {
        result["exclusion_bound"] = rational_json(*bound);
      }
      Json inputs = descriptor_json(desc);
      inputs["d"] = d;
      inputs["n"] = n;
      out << dump(make_envelope("classify", inputs, result, r.notes));
      break;
    }
    case Format::Csv:
      out << "schema,type,rank,node,d,n,delta,region,verdict,criterion\n"
          << "cicrit-classify-csv/1," << to_string(desc.type) << ',' << desc.rank << ',' << desc.node << ',' << d
          << ',' << n << ',' << r.delta << ',' << to_string(r.region) << ',' << to_string(r.verdict.kind) << ','
          << criterion << '\n';
      break;
    case Format::Plain:
      out << "variety=" << desc.name() << '\n'
          << "delta=" << r.delta << '\n'
          << "region=" << to_string(r.region) << '\n'
          << "verdict=" << to_string(r.verdict.kind) << (criterion.empty() ? "" : "(" + criterion + ")") << '\n';
      for (const auto& a : r.applied) {
        out << "  " << to_string(a.id) << ": " << to_string(a.outcome) << " -- " << a.detail << '\n';
      }
      for (const auto& note : r.notes) {
        out << "note: " << note << '\n';
      }
      break;
  }
  return {kExitOk, out.str(), ""};
}

// ---- deltamin ----

CommandOutput cmd_deltamin(unsigned p_max, const std::optional<std::filesystem::path>& cache, Format format) {
  if (p_max < 1) {
    return failure(kExitUsage, "deltamin: p_max must be >= 1");
  }
  const DeltaMinTable table = cache ? delta_min_table_cached(*cache, p_max) : schneider_table(p_max);
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& row : table.rows) {
        rows.push_back(Json{{"p", row.p}, {"delta_min", row.delta_min}, {"c1", row.witness.c1}, {"d", row.witness.d}});
      }
      out << dump(make_envelope("deltamin", Json{{"p_max", p_max}}, Json{{"rows", rows}},
                                {"minima use Riemann-Roch integrality of all twists only"}));
      break;
    }
    case Format::Csv:
      out << "schema,p,delta_min,c1,d\n";
      for (const auto& row : table.rows) {
        out << "cicrit-deltamin-csv/1," << row.p << ',' << row.delta_min << ',' << row.witness.c1 << ','
            << row.witness.d << '\n';
      }
      break;
    case Format::Plain:
      out << "p  delta_min  c1  d\n";
      for (const auto& row : table.rows) {
        out << row.p << "  " << row.delta_min << "  " << row.witness.c1 << "  " << row.witness.d << '\n';
      }
      break;
  }
  return {kExitOk, out.str(), ""};
}

// ---- verify ----

unsigned classical_dim_formula(const VarietyDescriptor& desc) {
  desc.validate();
  const unsigned l = desc.rank;
  const unsigned k = desc.node;
  switch (desc.type) {
    case DynkinType::A:
      return k * (l + 1 - k);
    case DynkinType::B:
    case DynkinType::C:
      return k * (4 * l - 3 * k + 1) / 2;
    case DynkinType::D:
      return k + 1 >= l ? l * (l - 1) / 2 : k * (4 * l - 3 * k - 1) / 2;
    default:
      throw PreconditionViolation("classical_dim_formula: not a classical type");
  }
}

CommandOutput cmd_verify(const VerifyRequest& request, Format format) {
  if (!request.prop_sch && !request.crossover && !request.tables_rank_max) {
    return failure(kExitUsage, "verify: choose at least one of --prop-sch, --crossover, --tables");
  }
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> failures;
  std::ostringstream plain;

  if (request.prop_sch) {
    const auto [from, to] = *request.prop_sch;
    if (from < 4 || from > to) {
      return failure(kExitUsage, "verify --prop-sch requires 4 <= p_from <= p_to");
    }
    inputs["prop_sch"] = Json{from, to};
    const PropBoundReport report = verify_prop_bound(from, to);
    Json rows = Json::array();
    for (const auto& e : report.entries) {
      rows.push_back(Json{{"p", e.p},
                          {"delta_min", e.delta_min},
                          {"bound", e.bound.str()},
                          {"margin", e.margin.str()},
                          {"holds", e.holds}});
      plain << "prop-sch p=" << e.p << " delta_min=" << e.delta_min << " bound=" << e.bound.str()
            << " margin=" << e.margin.str() << (e.holds ? " ok" : " VIOLATED") << '\n';
      if (!e.holds) {
        failures.push_back("prop-sch violated at p = " + std::to_string(e.p));
      }
    }
    result["prop_sch"] = Json{{"pass", report.all_hold()}, {"rows", rows}};
  }

  if (request.crossover) {
    inputs["crossover"] = true;
    const unsigned ell = crossover_ell();
    result["crossover"] = Json{{"ell", ell}, {"expected", 18}, {"pass", ell == 18}};
    plain << "crossover ell=" << ell << (ell == 18 ? " ok" : " MISMATCH") << '\n';
    if (ell != 18) {
      failures.push_back("crossover is " + std::to_string(ell) + ", expected 18");
    }
  }

  if (request.tables_rank_max) {
    const unsigned rank_max = *request.tables_rank_max;
    inputs["tables"] = rank_max;
    std::size_t checked = 0;
    Json mismatches = Json::array();
    for (const DynkinType type : {DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D}) {
      for (unsigned l = 1; l <= rank_max; ++l) {
        try {
          validate_type_rank(type, l);
        } catch (const PreconditionViolation&) {
          continue;
        }
        if (positive_roots(type, l).size() != positive_root_count(type, l)) {
          mismatches.push_back(to_string(type) + std::to_string(l) + ": positive root count");
        }
        for (unsigned k = 1; k <= l; ++k) {
          const VarietyDescriptor desc{type, l, k};
          const int m = static_cast<int>(fano_index(desc)) - 3;
          const unsigned dim = variety_dim(desc);
          ++checked;
          if (m != *table_m(desc)) {
            mismatches.push_back(desc.name() + ": m = " + std::to_string(m) + ", table " + std::to_string(*table_m(desc)));
          }
          if (dim != classical_dim_formula(desc)) {
            mismatches.push_back(desc.name() + ": dim = " + std::to_string(dim) + ", formula " +
                                 std::to_string(classical_dim_formula(desc)));
          }
        }
      }
    }
    for (const DynkinType type : {DynkinType::E6, DynkinType::E7, DynkinType::E8, DynkinType::F4, DynkinType::G2}) {
      const unsigned l = type == DynkinType::E6   ? 6
                         : type == DynkinType::E7 ? 7
                         : type == DynkinType::E8 ? 8
                         : type == DynkinType::F4 ? 4
                                                  : 2;
      if (positive_roots(type, l).size() != positive_root_count(type, l)) {
        mismatches.push_back(to_string(type) + ": positive root count");
      }
    }
    result["tables"] = Json{{"checked", checked}, {"mismatches", mismatches}, {"pass", mismatches.empty()}};
    plain << "tables checked=" << checked << " mismatches=" << mismatches.size() << '\n';
    for (const auto& mm : mismatches) {
      failures.push_back(mm.get<std::string>());
    }
  }

  result["pass"] = failures.empty();
  result["failures"] = failures;
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << dump(make_envelope("verify", inputs, result, {}));
      break;
    case Format::Csv:
      out << "schema,check,pass\n";
      for (const auto& [key, value] : result.items()) {
        if (value.is_object() && value.contains("pass")) {
          out << "cicrit-verify-csv/1," << key << ',' << bool_text(value["pass"].get<bool>()) << '\n';
        }
      }
      break;
    case Format::Plain:
      out << plain.str() << (failures.empty() ? "PASS\n" : "FAIL\n");
      break;
  }
  return {failures.empty() ? kExitOk : kExitAssertionFailure, out.str(), ""};
}

// ---- plot ----

CommandOutput cmd_plot(const VarietyDescriptor& desc, std::optional<std::int64_t> d_max,
                       const std::optional<std::filesystem::path>& out_file) {
  if (d_max && *d_max < 1) {
    return failure(kExitUsage, "plot: --d-max must be positive");
  }
  std::string svg;
  try {
    svg = render_plane_svg(desc, d_max);
  } catch (const DataUnavailable& e) {
    return failure(kExitDataUnavailable, e.what());
  }
  if (!out_file) {
    return {kExitOk, svg, ""};
  }
  std::ofstream file(*out_file, std::ios::binary | std::ios::trunc);
  if (!file || !(file << svg) || !file.flush()) {
    return failure(kExitUsage, "plot: cannot write " + out_file->string());
  }
  return {kExitOk, "", ""};
}

// ---- argument parsing ----

namespace {

struct DescriptorArgs {
  std::string type;
  unsigned rank = 0;
  unsigned node = 0;
};

void add_descriptor(CLI::App* sub, DescriptorArgs& args) {
  sub->add_option("type", args.type, "Dynkin type: A B C D E F G (or E6 E7 E8 F4 G2)")->required();
  sub->add_option("rank", args.rank, "Rank l")->required();
  sub->add_option("node", args.node, "Marked node k (Bourbaki numbering)")->required();
}

VarietyDescriptor to_descriptor(const DescriptorArgs& args) {
  VarietyDescriptor desc{parse_dynkin_type(args.type, args.rank), args.rank, args.node};
  desc.validate();
  return desc;
}

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical complete-intersection criteria for subvarieties of G/P"};
  app.require_subcommand(1);

  Format format = Format::Json;
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->capture_default_str();

  DescriptorArgs variety_args;
  CLI::App* variety = app.add_subcommand("variety", "Invariants of G/P");
  add_descriptor(variety, variety_args);

  DescriptorArgs classify_args;
  std::int64_t classify_d = 0;
  std::int64_t classify_n = 0;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a (d, n) point for a 2-codimensional X");
  add_descriptor(classify_cmd, classify_args);
  classify_cmd->add_option("d", classify_d, "Degree d_X")->required();
  classify_cmd->add_option("n", classify_n, "det N = O(n)")->required();

  unsigned p_max = 0;
  std::string cache_path;
  CLI::App* deltamin = app.add_subcommand("deltamin", "Minimal integral discriminants on P^1..P^p_max");
  deltamin->add_option("p_max", p_max, "Largest projective dimension")->required();
  deltamin->add_option("--cache", cache_path, "Cache file (default: $CI_CRITERIA_CACHE, else no cache)");

  std::vector<unsigned> prop_sch;
  bool crossover = false;
  unsigned tables_rank_max = 0;
  CLI::App* verify = app.add_subcommand("verify", "Check bounds and tables");
  verify->add_option("--prop-sch", prop_sch, "p_from p_to")->expected(2);
  verify->add_flag("--crossover", crossover, "Smallest l where the quartic degree bound wins");
  verify->add_option("--tables", tables_rank_max, "Cross-check root data up to this rank");

  DescriptorArgs plot_args;
  std::int64_t d_max = 0;
  std::string plot_out;
  CLI::App* plot = app.add_subcommand("plot", "SVG of the (d, n)-plane");
  add_descriptor(plot, plot_args);
  plot->add_option("--d-max", d_max, "Largest degree shown");
  plot->add_option("--out", plot_out, "Output file (default: stdout)");

  for (CLI::App* sub : {variety, classify_cmd, deltamin, verify, plot}) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitUsage;
  }

  CommandOutput result;
  try {
    if (*variety) {
      result = cmd_variety(to_descriptor(variety_args), format);
    } else if (*classify_cmd) {
      result = cmd_classify(to_descriptor(classify_args), classify_d, classify_n, format);
    } else if (*deltamin) {
      std::optional<std::filesystem::path> cache;
      if (!cache_path.empty()) {
        cache = cache_path;
      } else if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') {
        cache = env;
      }
      result = cmd_deltamin(p_max, cache, format);
    } else if (*verify) {
      VerifyRequest request;
      if (!prop_sch.empty()) {
        request.prop_sch = std::pair{prop_sch[0], prop_sch[1]};
      }
      request.crossover = crossover;
      if (verify->count("--tables") > 0) {
        request.tables_rank_max = tables_rank_max;
      }
      result = cmd_verify(request, format);
    } else if (*plot) {
      result = cmd_plot(to_descriptor(plot_args), plot->count("--d-max") > 0 ? std::optional(d_max) : std::nullopt,
                        plot_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(plot_out));
    }
  } catch (const PreconditionViolation& e) {
    result = failure(kExitUsage, e.what());
  } catch (const DataUnavailable& e) {
    result = failure(kExitDataUnavailable, e.what());
  }
  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace cicrit::cli
