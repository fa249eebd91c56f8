// Acceptance checks: one line per criterion, nonzero exit when any fails.
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "betadesign/binomial.hpp"
#include "betadesign/bounds.hpp"
#include "betadesign/constructions.hpp"
#include "betadesign/design.hpp"
#include "betadesign/exact.hpp"
#include "betadesign/quadratic.hpp"
#include "betadesign/verifier.hpp"

using namespace betadesign;

namespace {

int g_failed_criteria = 0;
bool g_current_ok = true;

#define REQUIRE(expr)                                                      \
  do {                                                                     \
    if (!(expr)) {                                                         \
      g_current_ok = false;                                                \
      std::printf("    failed: %s (line %d)\n", #expr, __LINE__);          \
    }                                                                      \
  } while (0)

void run_criterion(int number, const char* label, void (*body)()) {
  g_current_ok = true;
  auto start = std::chrono::steady_clock::now();
  body();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%s %2d. %s [%.2f s]\n", g_current_ok ? "PASS" : "FAIL", number,
              label, seconds);
  if (!g_current_ok) ++g_failed_criteria;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BETADESIGN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult result;
  if (!pipe) return result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

long long count_deep_covers(const Design& design, const std::vector<int>& points,
                            int depth) {
  Block x = block_from_points(points, design.v);
  long long covers = 0;
  for (Block b : design.blocks)
    if (std::popcount(b & x) >= depth) ++covers;
  return covers;
}

void criterion_witt_fixture() {
  auto start = std::chrono::steady_clock::now();
  RunResult constructed = run_cli("construct witt24");
  REQUIRE(constructed.exit_code == 0);
  Design witt = parse_design(constructed.out);
  REQUIRE(witt.blocks.size() == 759);
  auto multiplicity = is_t_design(witt, 5);
  REQUIRE(multiplicity.has_value());
  REQUIRE(*multiplicity == 1);
  DesignParameters params = extract_parameters(witt);
  REQUIRE(params.v == 24);
  REQUIRE(params.k == 8);
  REQUIRE(params.d == 4);
  REQUIRE(elapsed_since(start) < 5.0);
}

void criterion_beta_sweep() {
  auto start = std::chrono::steady_clock::now();
  Design witt = steiner_5_8_24();
  Design comp = complement_design(witt);

  BetaVerdict w1 = is_beta_i(witt, 1);
  REQUIRE(w1.holds);
  REQUIRE(w1.subsets_total == 42504);
  BetaVerdict w2 = is_beta_i(witt, 2);
  REQUIRE(w2.holds);
  REQUIRE(w2.subsets_total == 346104);

  for (int i : {3, 4}) {
    BetaVerdict verdict = is_beta_i(witt, i);
    REQUIRE(!verdict.holds);
    REQUIRE(verdict.witness.has_value());
    if (verdict.witness) {
      long long covers = count_deep_covers(witt, verdict.witness->points, 4 + i);
      REQUIRE(covers == verdict.witness->cover_count);
      REQUIRE(covers != 1);
    }
  }
  for (int i : {3, 4}) {
    BetaVerdict verdict = is_beta_i(comp, i);
    REQUIRE(verdict.holds);
    REQUIRE(!verdict.witness.has_value());
  }
  REQUIRE(elapsed_since(start) < 60.0);
}

void criterion_block_count_cap() {
  Design witt = steiner_5_8_24();
  ExactInt blocks(static_cast<long long>(witt.blocks.size()));
  BlockCountBound level1 = block_count_bound(24, 8, 4, 1);
  BlockCountBound level2 = block_count_bound(24, 8, 4, 2);
  REQUIRE(level1.divisible);
  REQUIRE(level2.divisible);
  REQUIRE(level1.b_max == ExactRational(blocks));
  REQUIRE(level2.b_max == ExactRational(blocks));
}

void criterion_mu_d() {
  Design witt = steiner_5_8_24();
  DesignParameters params = extract_parameters(witt);
  bool all_280 = true;
  for (Block b : witt.blocks)
    if (mu_d_bruteforce(witt, b) != 280) all_280 = false;
  REQUIRE(all_280);
  REQUIRE(mu_d_formula(params, 1) == 280);
  REQUIRE(mu_d_formula(params, 2) == 280);
}

void criterion_s1_family() {
  Design witt = steiner_5_8_24();
  AlphaDistribution s1 = enumerate_family(witt, 2, SubsetFamily::S1);
  REQUIRE(s1.n == 10626);
  REQUIRE(s1.histogram.size() == 1);
  REQUIRE(s1.histogram.count(5) == 1);
  REQUIRE(s1_size_formula(24, 8, 4, 2, 759) == 10626);
  AlphaAverageResult average = s1_alpha_average_check(witt, 2);
  REQUIRE(average.equality);
  REQUIRE(average.lhs == 5);
  REQUIRE(average.rhs == 5);
}

void criterion_s2_family() {
  Design witt = steiner_5_8_24();
  const int d = 4, i = 1;
  AlphaDistribution s2 = enumerate_family(witt, i, SubsetFamily::S2);
  REQUIRE(s2.member_size == d + 2 * (i + 1));
  REQUIRE(s2.counting_level == d + i + 1);
  REQUIRE(s2.histogram.size() == 1);
  REQUIRE((d + 2 * (i + 1)) % (i + 1) == 0);
  long long expected_alpha = (d + 2 * (i + 1)) / (i + 1);
  REQUIRE(expected_alpha == 4);
  REQUIRE(s2.histogram.count(expected_alpha) == 1);
  REQUIRE(s2.histogram.at(expected_alpha) == s2.n);
}

void criterion_perfect_code() {
  PerfectCodeBounds pc = perfect_code_bounds(2, 8);
  REQUIRE(pc.anticode_upper == make_rational(35, 2));
  REQUIRE(pc.radicand_upper == 1444);
  REQUIRE(isqrt_floor(pc.radicand_upper) * isqrt_floor(pc.radicand_upper) ==
          pc.radicand_upper);
  REQUIRE(compare_root(ExactRational(15), pc.upper_bound) == RootOrder::equal);
  REQUIRE(compare_root(ExactRational(16), pc.lower_bound) == RootOrder::less);
  REQUIRE(!pc.admissible_v.has_value());
  REQUIRE(s1_quadratic(ExactRational(8), 3, 5, 3) == -36);
  REQUIRE(s1_quadratic(ExactRational(9), 3, 5, 3) == -68);
}

void criterion_identity_suites() {
  auto start = std::chrono::steady_clock::now();

  // binomial convolution identity
  for (long long m = 1; m <= 20; ++m)
    for (long long s = 1; s <= m + 6; ++s)
      for (long long j = 1; j <= s; ++j) {
        ExactRational closed = convolution_closed_form(m, s, j);
        REQUIRE(is_integral(closed));
        REQUIRE(ExactRational(convolution_sum(m, s, j)) == closed);
      }

  // factored value of the first quadratic at the window upper gap
  for (int i = 3; i <= 12; ++i)
    for (int c = i - 1; c <= 14; ++c)
      for (int d = 0; d <= 14; ++d) {
        ExactRational x2 = window_upper_gap(d, c, i);
        ExactRational expected =
            -make_rational(ExactInt(d + i - 1) * (c - i + 1), ExactInt(i - 1)) *
            (ExactInt(c - 2 * i + 2) * d + 2 * ExactInt(i - 1) * c -
             4 * i * i + 10 * i - 6);
        REQUIRE(s1_quadratic(x2, d, c, i) == expected);
      }

  // factored value of the second quadratic at the window lower gap
  for (int i = 1; i <= 12; ++i)
    for (int c = i; c <= 14; ++c)
      for (int d = 0; d <= 14; ++d) {
        ExactRational x1 = window_lower_gap(d, c, i);
        ExactRational expected =
            make_rational(ExactInt(d + i) * (c - i), ExactInt(i)) *
            (ExactInt(d + 2 * i) * (c - 2 * i) - 2 * i);
        REQUIRE(s2_quadratic(x1, d, c, i) == expected);
      }

  // complement transport between the two quadratics
  for (int i = 1; i <= 12; ++i)
    for (int c = i; c <= 14; ++c)
      for (int d = 0; d <= 14; ++d)
        for (int x = 0; x <= 20; ++x)
          REQUIRE(s1_quadratic(ExactRational(c + d), x - c, c, c - i + 1) ==
                  s2_quadratic(ExactRational(x), d, c, i));

  // zero structure and boundary values of the counting polynomial
  for (int i = 3; i <= 8; ++i)
    for (int c = i + 2; c <= 12; ++c)
      for (int d = 0; d <= 10; ++d) {
        int k = c + d;
        for (int j = 0; j <= i - 3; ++j)
          REQUIRE(s1_count_poly_direct(j, k, d, i) == 0);
        for (int j = 0; j <= i - 1; ++j)
          REQUIRE(s1_count_poly_extended(j, k, d, i) == 0);
        REQUIRE(s1_count_poly_direct(i - 2, k, d, i) ==
                ExactInt(c - i + 2) * (c - i + 1) * (c - i) *
                    binomial(c + d, d + i - 2));
        REQUIRE(s1_count_poly_direct(i - 1, k, d, i) ==
                ExactInt(c - i + 3) * (c - i + 2) * (c - i + 1) *
                    (binomial(c + d, d + i - 2) * (i - 1) +
                     binomial(c + d, d + i - 3)));
        for (int x = 0; x <= 20; ++x)
          REQUIRE(ExactRational(s1_count_poly_direct(x, k, d, i)) ==
                  s1_count_poly_closed(x, k, d, i));
      }

  // exact perfect-code upper bound never beats the anticode cap
  for (int e = 2; e <= 20; ++e)
    for (int k = 2 * e + 2; k <= 100; ++k) {
      PerfectCodeBounds pc = perfect_code_bounds(e, k);
      REQUIRE(compare_root(pc.anticode_upper, pc.upper_bound) !=
              RootOrder::less);
    }

  // radical endpoint of the wide c-range stays below 2i+7
  for (int i = 8; i <= 100; ++i) {
    CRange range = c_range_bounds(i, CRangeMode::wide_not_prev);
    REQUIRE(range.upper_root.has_value());
    REQUIRE(compare_root(ExactRational(2 * i + 7), *range.upper_root) ==
            RootOrder::greater);
  }

  REQUIRE(elapsed_since(start) < 30.0);
}

void criterion_tdesign_roots() {
  TDesignRootScan scan = tdesign_polynomial_roots(24, 8, 4, 2);
  REQUIRE(scan.smallest.has_value());
  REQUIRE(*scan.smallest == 5);
  REQUIRE(scan.values.size() >= 4);
  REQUIRE(scan.values[0] == 204);
  REQUIRE(scan.values[1] == 120);
  REQUIRE(scan.values[2] == 60);
  REQUIRE(scan.values[3] == 21);
  Design witt = steiner_5_8_24();
  auto multiplicity = is_t_design(witt, 5);
  REQUIRE(multiplicity.has_value());
  REQUIRE(*multiplicity == 1);
}

void criterion_screen_regressions() {
  const std::string args = "screen --v 3..30 --k 2..15 --d 0..14";
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  REQUIRE(!first.out.empty());
  REQUIRE(first.out == second.out);
  REQUIRE(first.out.find("\n24,8,4,1,design,feasible,,759,1,24,,\n") !=
          std::string::npos);
  REQUIRE(first.out.find("\n24,8,4,2,design,feasible,,759,1,16,24,\n") !=
          std::string::npos);
  REQUIRE(first.out.find("\n20,10,4,3,design,infeasible,outer-upper,8398,293,"
                         "20,24,gamma1=9.6176\n") != std::string::npos);
  REQUIRE(first.out.find("\n11,4,1,1,design,infeasible,divisibility,55,6,9,,\n") !=
          std::string::npos);
}

}  // namespace

int main() {
  run_criterion(1, "witt fixture: 759 octads, 5-design multiplicity 1, parameters (24,8,4)",
                criterion_witt_fixture);
  run_criterion(2, "beta levels: witt holds at 1,2 and fails at 3,4 with witnesses; complement holds at 3,4",
                criterion_beta_sweep);
  run_criterion(3, "block count cap met exactly at both levels",
                criterion_block_count_cap);
  run_criterion(4, "mu_d is 280 for every octad, by brute force and by formula",
                criterion_mu_d);
  run_criterion(5, "s1 family: 10626 members, alpha constant 5, average check tight",
                criterion_s1_family);
  run_criterion(6, "s2 family: every member meets exactly 4 blocks at the counting level",
                criterion_s2_family);
  run_criterion(7, "perfect code bounds at e=2, k=8 leave an empty interval",
                criterion_perfect_code);
  run_criterion(8, "identity suites hold exactly over their grids",
                criterion_identity_suites);
  run_criterion(9, "t-design indicator: values 204,120,60,21 and smallest root 5",
                criterion_tdesign_roots);
  run_criterion(10, "screen grid reproduces pinned verdicts with byte-identical csv",
                criterion_screen_regressions);

  if (g_failed_criteria == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failed_criteria);
  return 1;
}
