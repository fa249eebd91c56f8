// Command line front end: feasibility reports, grid screening, design
// verification, construction export, and t-design root scans.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "betadesign/bounds.hpp"
#include "betadesign/constructions.hpp"
#include "betadesign/design.hpp"
#include "betadesign/screen.hpp"
#include "betadesign/verifier.hpp"

namespace {

using namespace betadesign;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

// Parses "a..b" or a single integer into an inclusive range.
GridRange parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int value = std::stoi(text);
      return {value, value};
    }
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected INT or LO..HI, got " + text);
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

int cmd_report(int v, int k, int d, int i, const std::string& format) {
  FeasibilityReport report = feasibility_report(v, k, d, i);
  std::cout << (format == "json" ? report_to_json(report)
                                 : report_to_text(report));
  return report.feasible ? kExitOk : kExitRefuted;
}

int cmd_screen(const std::string& mode, const std::string& v_range,
               const std::string& k_range, const std::string& d_range,
               const std::string& i_range, const std::string& e_range,
               const std::string& out_path, const std::string& format,
               int jobs) {
  ScreenResult result;
  if (mode == "design") {
    GridRange i = i_range.empty() ? GridRange{} : parse_range(i_range);
    result = run_screen_design(parse_range(v_range), parse_range(k_range),
                               parse_range(d_range), i, jobs);
  } else {
    result = run_screen_perfect(parse_range(e_range), parse_range(k_range), jobs);
  }
  write_output(out_path,
               format == "json" ? screen_to_json(result) : screen_to_csv(result));
  return kExitOk;
}

json verdict_to_json(const BetaVerdict& verdict, int v) {
  json entry{{"i", verdict.i},
             {"holds", verdict.holds},
             {"subsets_total", verdict.subsets_total}};
  if (verdict.witness) {
    json points = json::array();
    for (int p : verdict.witness->points) points.push_back(p);
    entry["witness"] = {{"points", points},
                        {"cover_count", verdict.witness->cover_count}};
  }
  (void)v;
  return entry;
}

int cmd_verify(const std::string& path, const std::string& i_spec,
               std::uint64_t max_subsets, int jobs) {
  Design design = load_design(path);
  DesignParameters params = extract_parameters(design);
  EnumLimits limits;
  limits.max_subsets = max_subsets;
  limits.jobs = jobs;

  json doc{{"file", path},
           {"v", params.v},
           {"k", params.k},
           {"d", params.d},
           {"b", static_cast<std::uint64_t>(params.b)},
           {"c", params.c}};

  int single = 0;
  bool all_levels = i_spec == "all";
  if (!all_levels) single = std::stoi(i_spec);

  json levels = json::array();
  bool any_holds = false;
  bool claimed_holds = true;
  for (int i = 1; i <= params.c; ++i) {
    if (!all_levels && i != single) continue;
    json entry;
    try {
      BetaVerdict verdict = is_beta_i(design, i, limits);
      entry = verdict_to_json(verdict, params.v);
      any_holds = any_holds || verdict.holds;
      if (!all_levels) claimed_holds = verdict.holds;
    } catch (const EnumerationCapError& e) {
      entry = json{{"i", i}, {"skipped", e.what()}};
      if (!all_levels) claimed_holds = false;
    }
    levels.push_back(entry);
  }
  doc["levels"] = levels;

  {
    long long lo = -1, hi = -1;
    for (Block block : design.blocks) {
      long long mu = mu_d_bruteforce(design, block);
      if (lo < 0 || mu < lo) lo = mu;
      if (mu > hi) hi = mu;
    }
    doc["mu_d_bruteforce"] = {{"min", lo}, {"max", hi}, {"constant", lo == hi}};
  }
  json mu_formula = json::array();
  for (int i = 1; i <= params.c; ++i) {
    ExactRational mu = mu_d_formula(params, i);
    mu_formula.push_back({{"i", i}, {"value", rational_to_string(mu)}});
  }
  doc["mu_d_formula"] = mu_formula;

  json families = json::array();
  for (int i = 1; i <= params.c; ++i) {
    json entry{{"i", i}};
    try {
      if (i >= 2) {
        AlphaDistribution s1 =
            enumerate_family(design, i, SubsetFamily::S1, limits);
        entry["s1"] = {{"n", s1.n},
                       {"alpha_constant", s1.alpha_constant()}};
        AlphaAverageResult avg = s1_alpha_average_check(design, i, limits);
        entry["s1_alpha_average"] = {{"lhs", rational_to_string(avg.lhs)},
                                     {"rhs", rational_to_string(avg.rhs)},
                                     {"equality", avg.equality}};
      }
      if (params.c >= i + 1) {
        AlphaDistribution s2 =
            enumerate_family(design, i, SubsetFamily::S2, limits);
        entry["s2"] = {{"n", s2.n},
                       {"alpha_constant", s2.alpha_constant()}};
      }
    } catch (const EnumerationCapError& e) {
      entry["skipped"] = e.what();
    } catch (const std::logic_error& e) {
      entry["inapplicable"] = e.what();
    }
    families.push_back(entry);
  }
  doc["families"] = families;

  for (int i = 1; i <= params.c; ++i) {
    TDesignRootScan scan = tdesign_polynomial_roots(params, i);
    if (i == 1) doc["tdesign_roots"] = json::array();
    json roots = json::array();
    for (int t : scan.roots) roots.push_back(t);
    doc["tdesign_roots"].push_back(
        {{"i", i},
         {"roots", roots},
         {"smallest", scan.smallest ? json(*scan.smallest) : json(nullptr)},
         {"degenerate", scan.degenerate}});
  }

  std::cout << doc.dump(2) << "\n";
  bool ok = all_levels ? any_holds : claimed_holds;
  return ok ? kExitOk : kExitRefuted;
}

int cmd_construct(const std::string& name, const std::string& out_path) {
  Design design;
  if (name == "witt24") {
    design = steiner_5_8_24();
  } else if (name == "fano") {
    design = fano_plane();
  } else if (name.rfind("pair:", 0) == 0) {
    design = pair_design(std::stoi(name.substr(5)));
  } else if (name.rfind("complete:", 0) == 0) {
    std::string args = name.substr(9);
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("complete:v,k needs two integers");
    design = complete_design(std::stoi(args.substr(0, comma)),
                             std::stoi(args.substr(comma + 1)));
  } else if (name.rfind("complement:", 0) == 0) {
    design = complement_design(load_design(name.substr(11)));
  } else {
    std::cerr << "unknown construction: " << name << "\n";
    return kExitRefuted;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << serialize_design(design);
  } else {
    save_design(design, out_path);
  }
  return kExitOk;
}

int cmd_tdesign_roots(int v, int k, int d, int i) {
  TDesignRootScan scan = tdesign_polynomial_roots(v, k, d, i);
  json values = json::array();
  for (std::size_t t = 0; t < scan.values.size(); ++t)
    values.push_back({{"t", t + 1}, {"value", scan.values[t].str()}});
  json roots = json::array();
  for (int t : scan.roots) roots.push_back(t);
  json doc{{"v", v},
           {"k", k},
           {"d", d},
           {"i", i},
           {"values", values},
           {"roots", roots},
           {"smallest", scan.smallest ? json(*scan.smallest) : json(nullptr)},
           {"degenerate", scan.degenerate}};
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact feasibility bounds and verification for block designs"};
  app.set_version_flag("--version", std::string("betadesign ") + kToolVersion);
  app.require_subcommand(1);

  // report
  int rv = 0, rk = 0, rd = 0, ri = 0;
  std::string report_format = "text";
  CLI::App* report = app.add_subcommand("report", "single-parameter feasibility report");
  report->add_option("v", rv)->required();
  report->add_option("k", rk)->required();
  report->add_option("d", rd)->required();
  report->add_option("i", ri)->required();
  report->add_option("--format", report_format)
      ->check(CLI::IsMember({"text", "json"}));

  // screen
  std::string mode = "design", sv, sk, sd, si, se, out_path, screen_format = "csv";
  int jobs = 0;
  CLI::App* screen = app.add_subcommand("screen", "grid feasibility screening");
  screen->add_option("--mode", mode)->check(CLI::IsMember({"design", "perfect-code"}));
  screen->add_option("--v", sv, "v range, INT or LO..HI");
  screen->add_option("--k", sk, "k range")->required();
  screen->add_option("--d", sd, "d range");
  screen->add_option("--i", si, "level range (default: all valid levels)");
  screen->add_option("--e", se, "error radius range (perfect-code mode)");
  screen->add_option("--out", out_path, "output path (default: stdout)");
  screen->add_option("--format", screen_format)->check(CLI::IsMember({"csv", "json"}));
  screen->add_option("--jobs", jobs, "worker threads (0 = auto)");

  // verify
  std::string design_path, i_spec = "all";
  std::uint64_t max_subsets = 100000000ULL;
  int verify_jobs = 0;
  CLI::App* verify = app.add_subcommand("verify", "verify a design file");
  verify->add_option("file", design_path)->required();
  verify->add_option("--i", i_spec, "level to check, or 'all'");
  verify->add_option("--max-subsets", max_subsets, "enumeration cap");
  verify->add_option("--jobs", verify_jobs, "worker threads (0 = auto)");

  // construct
  std::string construct_name, construct_out;
  CLI::App* construct = app.add_subcommand(
      "construct", "emit a built-in design (witt24, fano, pair:K, complete:V,K, complement:FILE)");
  construct->add_option("name", construct_name)->required();
  construct->add_option("--out", construct_out, "output path (default: stdout)");

  // tdesign-roots
  int tv = 0, tk = 0, td = 0, ti = 0;
  CLI::App* tdesign = app.add_subcommand("tdesign-roots", "scan the t-design indicator polynomial");
  tdesign->add_option("v", tv)->required();
  tdesign->add_option("k", tk)->required();
  tdesign->add_option("d", td)->required();
  tdesign->add_option("i", ti)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(rv, rk, rd, ri, report_format);
    if (screen->parsed()) {
      if (mode == "design" && (sv.empty() || sd.empty())) {
        std::cerr << "screen: design mode requires --v and --d\n";
        return kExitUsage;
      }
      if (mode == "perfect-code" && se.empty()) {
        std::cerr << "screen: perfect-code mode requires --e\n";
        return kExitUsage;
      }
      return cmd_screen(mode, sv, sk, sd, si, se, out_path, screen_format, jobs);
    }
    if (verify->parsed())
      return cmd_verify(design_path, i_spec, max_subsets, verify_jobs);
    if (construct->parsed()) return cmd_construct(construct_name, construct_out);
    if (tdesign->parsed()) return cmd_tdesign_roots(tv, tk, td, ti);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DesignFormatError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.byte_offset >= 0) std::cerr << " (byte " << e.byte_offset << ")";
    std::cerr << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}
