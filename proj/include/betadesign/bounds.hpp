#pragma once

#include "betadesign/exact.hpp"
#include "betadesign/quadratic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betadesign {

/// Counting cap on the number of blocks: C(v, d+2i-1) divided by the
/// per-block covering sum.  divisible records whether the quotient is an
/// integer, a hard requirement for a design meeting the cap exactly.
struct BlockCountBound {
  ExactInt numerator;
  ExactInt per_block_sum;
  ExactRational b_max;
  bool divisible = false;
};

/// Requires 0 <= d < k < v and 1 <= i <= (v-d+1)/2; throws
/// std::invalid_argument otherwise and std::domain_error when the per-block
/// sum vanishes (i > k-d).
BlockCountBound block_count_bound(int v, int k, int d, int i);

/// Interval the point count v must lie in at level i:
/// (d+2i)c/i <= v <= (d+2(i-1))c/(i-1), the upper bound absent at i = 1.
/// Hitting the upper endpoint is equivalent to the design verifying at
/// level i-1 as well; the lower endpoint likewise corresponds to i+1.
struct AdmissibleWindow {
  ExactRational lower;
  std::optional<ExactRational> upper;
};

AdmissibleWindow admissible_window(int k, int d, int i);

/// Quadratic in x = v - k controlling designs strictly below the window's
/// upper endpoint; nonnegativity is necessary there (levels i >= 2).
ExactRational s1_quadratic(const ExactRational& x, int d, int c, int i);

/// Quadratic in x = v - k controlling designs strictly above the window's
/// lower endpoint.
ExactRational s2_quadratic(const ExactRational& x, int d, int c, int i);

/// Smaller root of the s1 quadratic; upper bound for v - k when the window
/// upper endpoint is not achieved (requires i >= 3 for a positive lead).
QuadraticRootBound s1_root_bound(int d, int c, int i);

/// Larger root of the s2 quadratic; lower bound for v - k.
QuadraticRootBound s2_root_bound(int d, int c, int i);

/// Window upper endpoint minus k, as a rational in d, c, i (i >= 2).
ExactRational window_upper_gap(int d, int c, int i);
/// Window lower endpoint minus k.
ExactRational window_lower_gap(int d, int c, int i);

struct RootBoundCheck {
  bool applicable = false;
  bool passed = false;
  bool equality = false;
  std::optional<QuadraticRootBound> bound;
};

/// v - k must not exceed the smaller root of the s1 quadratic.  Applicable
/// when i >= 3, v >= 2k and v is strictly below the window upper endpoint.
RootBoundCheck outer_upper_check(int v, int k, int d, int i);

/// v - k must reach the larger root of the s2 quadratic.  Applicable when
/// v <= 2k, k-d >= i+1 and v is strictly above the window lower endpoint.
RootBoundCheck outer_lower_check(int v, int k, int d, int i);

/// Bounds on v for a perfect e-error-correcting code in the Johnson scheme
/// J(v, k), e >= 2 (equivalently a design at level i = e+1 with d = k-2e-1).
struct PerfectCodeBounds {
  int e = 0, k = 0;
  int i = 0, d = 0, c = 0;
  bool d_minimal = false;          // d == 1, the smallest admitted distance
  ExactInt radicand_upper;         // under the root of the upper bound
  ExactInt radicand_lower;
  QuadraticRootBound upper_bound;  // v <= this root
  QuadraticRootBound lower_bound;  // v >= this root
  ExactRational anticode_upper;    // (k-1)(2e+1)/e, the classical cap
  std::optional<std::pair<ExactInt, ExactInt>> admissible_v;  // inclusive
};

/// Requires e >= 2 and k >= 2e+2.
PerfectCodeBounds perfect_code_bounds(int e, int k);

/// Interval restrictions on c = k - d at level i, by window side and by
/// whether the adjacent level holds.
enum class CRangeMode {
  wide_not_prev,     // v >= 2k, level i-1 does not hold (i >= 3)
  wide_with_prev,    // v >= 2k, level i-1 holds, d > 0 (i >= 9)
  narrow_not_next,   // v <= 2k, level i+1 does not hold (i >= 18)
  narrow_small_c,    // v <= 2k, level i+1 does not hold, c >= 3 (i >= 15)
  narrow_with_next,  // v <= 2k, level i+1 holds, d > 0 (i >= 17)
};

struct CRange {
  bool applicable = false;
  std::optional<ExactInt> lower_int;             // inclusive
  std::optional<QuadraticRootBound> lower_root;  // strict
  std::optional<ExactInt> upper_int;             // inclusive
  std::optional<QuadraticRootBound> upper_root;  // strict
  std::optional<std::pair<ExactInt, ExactInt>> simplified;  // inclusive ints

  bool contains(const ExactInt& c) const;
};

CRange c_range_bounds(int i, CRangeMode mode);

/// Degree-i polynomial counting the S1 family: evaluated termwise from
/// binomial sums.  x must be a nonnegative integer.
ExactInt s1_count_poly_direct(int x, int k, int d, int i);

/// The same polynomial as C(x, i-2) * (p x^2 + q x + r).
struct S1CountCoeffs {
  ExactRational p, q, r;
};
S1CountCoeffs s1_count_coeffs(int k, int d, int i);
ExactRational s1_count_poly_closed(int x, int k, int d, int i);

/// Companion polynomial whose second binomial sum runs one term further;
/// vanishes at x = 0..i-1.
ExactInt s1_count_poly_extended(int x, int k, int d, int i);

/// |S1| = b * F(v-k) / ((v-k+c-2i+2)(v-k+c-2i+3)(v-k+c-2i+4)).
ExactRational s1_size_formula(int v, int k, int d, int i, const ExactInt& b);

/// One feasibility rule outcome.
struct FeasibilityCheck {
  std::string rule;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct FeasibilityReport {
  int v = 0, k = 0, d = 0, i = 0;
  std::vector<FeasibilityCheck> checks;
  bool feasible = false;
  std::string failing_rule;  // most specific failing rule, empty if feasible

  std::optional<BlockCountBound> bound;
  std::optional<AdmissibleWindow> window;
  std::string gamma_annotation;
};

/// Runs every screening rule for the parameter tuple.  Rules are ordered
/// from generic to specific; the reported failing rule is the most specific
/// one that failed.
FeasibilityReport feasibility_report(int v, int k, int d, int i);

}  // namespace betadesign
