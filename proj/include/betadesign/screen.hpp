#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "betadesign/bounds.hpp"

namespace betadesign {

inline constexpr const char* kToolVersion = "1.0.0";

// One rendered screening row. All fields are already formatted so the CSV
// and JSON writers emit identical verdict data.
struct ScreenRow {
  std::string v;
  std::string k;
  std::string d;
  std::string i;
  std::string mode;
  std::string verdict;
  std::string failing_rule;
  std::string b_max_num;
  std::string b_max_den;
  std::string window_lo;
  std::string window_hi;
  std::string gamma_annotation;
};

struct ScreenResult {
  std::vector<ScreenRow> rows;
  std::uint64_t feasible_count = 0;
  std::uint64_t infeasible_count = 0;
  std::map<std::string, std::uint64_t> failing_counts;
};

// Inclusive integer range for grid axes.
struct GridRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

inline constexpr std::uint64_t kGridCap = 10000000;

// Renders a single report row; used by both the screener and `report`.
ScreenRow screen_row_from_report(const FeasibilityReport& report);

// Maps feasibility_report over the (v, k, d, i) grid, keeping only tuples
// with d < k < v and 1 <= i <= k-d (the i range, when nonempty, is further
// clipped to [1, k-d]). Rows are sorted by (v, k, d, i). Throws
// std::invalid_argument when the grid is empty or exceeds kGridCap tuples.
ScreenResult run_screen_design(GridRange v, GridRange k, GridRange d,
                               GridRange i, int jobs = 0);

// Maps perfect_code_bounds over the (e, k) grid, keeping tuples with
// e >= 2 and k >= 2e+2. Rows are sorted by (e, k).
ScreenResult run_screen_perfect(GridRange e, GridRange k, int jobs = 0);

// CSV with a version header comment, one header row, data rows, and
// trailing summary comments. Byte-identical across runs on equal input.
std::string screen_to_csv(const ScreenResult& result);

// JSON document carrying the same row fields and summary counts.
std::string screen_to_json(const ScreenResult& result);

std::string report_to_text(const FeasibilityReport& report);
std::string report_to_json(const FeasibilityReport& report);

}  // namespace betadesign
