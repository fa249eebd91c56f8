#include "betadesign/screen.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace betadesign {

namespace {

using nlohmann::json;

// Summary counter order for CSV trailers; matches rule run order.
const std::array<const char*, 11> kRuleOrder = {
    "range",       "d-zero",        "d-max",
    "window",      "divisibility",  "outer-upper",
    "outer-lower", "c-range-wide",  "c-range-narrow",
    "mod4-endpoint", "perfect-interval"};

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Body>
void parallel_index_map(std::size_t total, int jobs, const Body& body) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1 || total < 256) {
    for (std::size_t idx = 0; idx < total; ++idx) body(idx);
    return;
  }
  std::size_t workers = std::min<std::size_t>(jobs, total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t idx = begin; idx < end; ++idx) body(idx);
    });
  }
  for (std::thread& t : pool) t.join();
}

void finalize_summary(ScreenResult& result) {
  for (const ScreenRow& row : result.rows) {
    if (row.verdict == "feasible" || row.verdict == "survives") {
      ++result.feasible_count;
    } else {
      ++result.infeasible_count;
      ++result.failing_counts[row.failing_rule];
    }
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

json row_to_json(const ScreenRow& row) {
  return json{{"v", row.v},
              {"k", row.k},
              {"d", row.d},
              {"i", row.i},
              {"mode", row.mode},
              {"verdict", row.verdict},
              {"failing_rule", row.failing_rule},
              {"b_max_num", row.b_max_num},
              {"b_max_den", row.b_max_den},
              {"window_lo", row.window_lo},
              {"window_hi", row.window_hi},
              {"gamma_annotation", row.gamma_annotation}};
}

}  // namespace

ScreenRow screen_row_from_report(const FeasibilityReport& report) {
  ScreenRow row;
  row.v = std::to_string(report.v);
  row.k = std::to_string(report.k);
  row.d = std::to_string(report.d);
  row.i = std::to_string(report.i);
  row.mode = "design";
  row.verdict = report.feasible ? "feasible" : "infeasible";
  row.failing_rule = report.failing_rule;
  if (report.bound) {
    row.b_max_num = numerator(report.bound->b_max).str();
    row.b_max_den = denominator(report.bound->b_max).str();
  }
  if (report.window) {
    row.window_lo = rational_to_string(report.window->lower);
    if (report.window->upper)
      row.window_hi = rational_to_string(*report.window->upper);
  }
  row.gamma_annotation = report.gamma_annotation;
  return row;
}

ScreenResult run_screen_design(GridRange v, GridRange k, GridRange d,
                               GridRange i, int jobs) {
  struct Tuple {
    int v, k, d, i;
  };
  std::vector<Tuple> grid;
  std::uint64_t count = 0;
  for (int pv = std::max(v.lo, 3); pv <= v.hi; ++pv) {
    for (int pk = std::max(k.lo, 2); pk <= std::min(k.hi, pv - 1); ++pk) {
      for (int pd = std::max(d.lo, 0); pd <= std::min(d.hi, pk - 1); ++pd) {
        int c = pk - pd;
        int ilo = i.empty() ? 1 : std::max(i.lo, 1);
        int ihi = i.empty() ? c : std::min(i.hi, c);
        for (int pi = ilo; pi <= ihi; ++pi) {
          if (++count > kGridCap)
            throw std::invalid_argument("screen: grid exceeds tuple cap");
          grid.push_back({pv, pk, pd, pi});
        }
      }
    }
  }
  if (grid.empty()) throw std::invalid_argument("screen: empty grid");

  ScreenResult result;
  result.rows.resize(grid.size());
  parallel_index_map(grid.size(), jobs, [&](std::size_t idx) {
    const Tuple& t = grid[idx];
    result.rows[idx] =
        screen_row_from_report(feasibility_report(t.v, t.k, t.d, t.i));
  });
  finalize_summary(result);
  return result;
}

ScreenResult run_screen_perfect(GridRange e, GridRange k, int jobs) {
  struct Tuple {
    int e, k;
  };
  std::vector<Tuple> grid;
  std::uint64_t count = 0;
  for (int pe = std::max(e.lo, 2); pe <= e.hi; ++pe) {
    for (int pk = std::max(k.lo, 2 * pe + 2); pk <= k.hi; ++pk) {
      if (++count > kGridCap)
        throw std::invalid_argument("screen: grid exceeds tuple cap");
      grid.push_back({pe, pk});
    }
  }
  if (grid.empty()) throw std::invalid_argument("screen: empty grid");

  ScreenResult result;
  result.rows.resize(grid.size());
  parallel_index_map(grid.size(), jobs, [&](std::size_t idx) {
    PerfectCodeBounds pc = perfect_code_bounds(grid[idx].e, grid[idx].k);
    ScreenRow row;
    if (pc.admissible_v) {
      row.v = pc.admissible_v->first.str() + ".." + pc.admissible_v->second.str();
      row.verdict = "survives";
    } else {
      row.verdict = "infeasible";
      row.failing_rule = "perfect-interval";
    }
    row.k = std::to_string(pc.k);
    row.d = std::to_string(pc.d);
    row.i = std::to_string(pc.i);
    row.mode = "perfect-code";
    row.window_lo = approximate_root(pc.lower_bound, 4);
    row.window_hi = approximate_root(pc.upper_bound, 4);
    row.gamma_annotation = "roos=" + rational_to_string(pc.anticode_upper);
    result.rows[idx] = row;
  });
  finalize_summary(result);
  return result;
}

std::string screen_to_csv(const ScreenResult& result) {
  std::ostringstream out;
  out << "# betadesign screen " << kToolVersion << "\n";
  out << "v,k,d,i,mode,verdict,failing_rule,b_max_num,b_max_den,window_lo,"
         "window_hi,gamma_annotation\n";
  for (const ScreenRow& row : result.rows) {
    out << csv_escape(row.v) << ',' << csv_escape(row.k) << ','
        << csv_escape(row.d) << ',' << csv_escape(row.i) << ','
        << csv_escape(row.mode) << ',' << csv_escape(row.verdict) << ','
        << csv_escape(row.failing_rule) << ',' << csv_escape(row.b_max_num)
        << ',' << csv_escape(row.b_max_den) << ',' << csv_escape(row.window_lo)
        << ',' << csv_escape(row.window_hi) << ','
        << csv_escape(row.gamma_annotation) << '\n';
  }
  out << "# rows=" << result.rows.size()
      << " feasible=" << result.feasible_count
      << " infeasible=" << result.infeasible_count << "\n";
  for (const char* rule : kRuleOrder) {
    auto it = result.failing_counts.find(rule);
    if (it != result.failing_counts.end())
      out << "# failing " << rule << "=" << it->second << "\n";
  }
  return out.str();
}

std::string screen_to_json(const ScreenResult& result) {
  json rows = json::array();
  for (const ScreenRow& row : result.rows) rows.push_back(row_to_json(row));
  json failing = json::object();
  for (const auto& [rule, n] : result.failing_counts) failing[rule] = n;
  json doc{{"tool", "betadesign screen"},
           {"version", kToolVersion},
           {"rows", rows},
           {"summary",
            {{"rows", result.rows.size()},
             {"feasible", result.feasible_count},
             {"infeasible", result.infeasible_count},
             {"failing", failing}}}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const FeasibilityReport& report) {
  std::ostringstream out;
  out << "parameters: v=" << report.v << " k=" << report.k << " d=" << report.d
      << " i=" << report.i << " c=" << (report.k - report.d) << "\n";
  if (report.window) {
    out << "window: [" << rational_to_string(report.window->lower) << ", "
        << (report.window->upper ? rational_to_string(*report.window->upper)
                                 : std::string("inf"))
        << "]\n";
  }
  if (report.bound) {
    out << "b_max: " << report.bound->numerator.str() << "/"
        << report.bound->per_block_sum.str() << " = "
        << rational_to_string(report.bound->b_max) << "\n";
  }
  if (!report.gamma_annotation.empty())
    out << "root bounds: " << report.gamma_annotation << "\n";
  for (const FeasibilityCheck& check : report.checks) {
    out << "  " << check.rule << ": "
        << (check.applicable ? (check.passed ? "pass" : "FAIL") : "n/a");
    if (!check.detail.empty()) out << " (" << check.detail << ")";
    out << "\n";
  }
  out << "verdict: "
      << (report.feasible ? "feasible"
                          : "infeasible(" + report.failing_rule + ")")
      << "\n";
  return out.str();
}

std::string report_to_json(const FeasibilityReport& report) {
  json checks = json::array();
  for (const FeasibilityCheck& check : report.checks) {
    checks.push_back({{"rule", check.rule},
                      {"applicable", check.applicable},
                      {"passed", check.passed},
                      {"detail", check.detail}});
  }
  json doc{{"v", report.v},          {"k", report.k},
           {"d", report.d},          {"i", report.i},
           {"feasible", report.feasible},
           {"failing_rule", report.failing_rule},
           {"checks", checks},
           {"gamma_annotation", report.gamma_annotation}};
  if (report.bound) {
    doc["b_max_num"] = numerator(report.bound->b_max).str();
    doc["b_max_den"] = denominator(report.bound->b_max).str();
    doc["divisible"] = report.bound->divisible;
  }
  if (report.window) {
    doc["window_lo"] = rational_to_string(report.window->lower);
    doc["window_hi"] = report.window->upper
                           ? json(rational_to_string(*report.window->upper))
                           : json(nullptr);
  }
  return doc.dump(2) + "\n";
}

}  // namespace betadesign
