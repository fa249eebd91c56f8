#include "betadesign/bounds.hpp"

#include <stdexcept>

#include "betadesign/binomial.hpp"

namespace betadesign {

namespace {

void require_params(int v, int k, int d, const char* op) {
  if (!(0 <= d && d < k && k < v))
    throw std::invalid_argument(std::string(op) + ": requires 0 <= d < k < v");
}

ExactRational rat(const ExactInt& n) { return ExactRational(n); }

}  // namespace

BlockCountBound block_count_bound(int v, int k, int d, int i) {
  require_params(v, k, d, "block_count_bound");
  if (i < 1 || 2 * i > v - d + 1)
    throw std::invalid_argument(
        "block_count_bound: requires 1 <= i <= (v-d+1)/2");
  BlockCountBound out;
  out.numerator = binomial(v, d + 2 * i - 1);
  out.per_block_sum = 0;
  for (int j = 0; j <= i - 1; ++j)
    out.per_block_sum += binomial(k, d + 2 * i - 1 - j) * binomial(v - k, j);
  if (out.per_block_sum == 0)
    throw std::domain_error(
        "block_count_bound: per-block sum vanishes (i exceeds k-d)");
  out.b_max = make_rational(out.numerator, out.per_block_sum);
  out.divisible = is_integral(out.b_max);
  return out;
}

AdmissibleWindow admissible_window(int k, int d, int i) {
  int c = k - d;
  if (d < 0 || c <= 0 || i < 1 || i > c)
    throw std::invalid_argument("admissible_window: requires 1 <= i <= k-d");
  AdmissibleWindow w;
  w.lower = make_rational(ExactInt(d + 2 * i) * c, ExactInt(i));
  if (i >= 2)
    w.upper = make_rational(ExactInt(d + 2 * (i - 1)) * c, ExactInt(i - 1));
  return w;
}

ExactRational s1_quadratic(const ExactRational& x, int d, int c, int i) {
  ExactInt a = ExactInt(i - 1) * (i - 2);
  ExactInt b = -ExactInt(i - 1) *
               (2 * ExactInt(c - i + 1) * d + 2 * ExactInt(c) * (i - 1) -
                3 * i + 4);
  ExactInt c0 = ExactInt(c - i + 1) * (c - i + 2) * d * d +
                ExactInt(c - i + 1) * ((2 * i - 3) * ExactInt(c) + 3 * i - 4) * d +
                ExactInt(i - 1) * (i - 2) * c * c +
                ExactInt(i - 1) * (3 * i - 4) * c -
                2 * ExactInt(i - 1) * (i - 1) * (2 * i - 3);
  return rat(a) * x * x + rat(b) * x + rat(c0);
}

ExactRational s2_quadratic(const ExactRational& x, int d, int c, int i) {
  ExactInt a = ExactInt(i) * (i + 1);
  ExactInt b = -ExactInt(i) *
               (2 * ExactInt(c - i) * d + 2 * ExactInt(i) * c + 3 * i + 1);
  ExactInt c0 = ExactInt(c - i) * (c - i - 1) * d * d +
                ExactInt(c - i) * ((2 * i + 1) * ExactInt(c) - 3 * i - 1) * d +
                ExactInt(i) * (i + 1) * c * c - ExactInt(i) * (3 * i + 1) * c +
                2 * ExactInt(i) * i * (2 * i + 1);
  return rat(a) * x * x + rat(b) * x + rat(c0);
}

QuadraticRootBound s1_root_bound(int d, int c, int i) {
  if (i < 3)
    throw std::invalid_argument("s1_root_bound: requires i >= 3");
  QuadraticRootBound q;
  // Recover coefficients from evaluations to keep a single source of truth.
  ExactRational at0 = s1_quadratic(ExactRational(0), d, c, i);
  ExactRational at1 = s1_quadratic(ExactRational(1), d, c, i);
  ExactRational at2 = s1_quadratic(ExactRational(2), d, c, i);
  ExactRational lead = (at2 - 2 * at1 + at0) / 2;
  q.a = lead;
  q.b = at1 - at0 - lead;
  q.c = at0;
  q.selector = RootSelector::smaller;
  return q;
}

QuadraticRootBound s2_root_bound(int d, int c, int i) {
  ExactRational at0 = s2_quadratic(ExactRational(0), d, c, i);
  ExactRational at1 = s2_quadratic(ExactRational(1), d, c, i);
  ExactRational at2 = s2_quadratic(ExactRational(2), d, c, i);
  QuadraticRootBound q;
  ExactRational lead = (at2 - 2 * at1 + at0) / 2;
  q.a = lead;
  q.b = at1 - at0 - lead;
  q.c = at0;
  q.selector = RootSelector::larger;
  return q;
}

ExactRational window_upper_gap(int d, int c, int i) {
  if (i < 2) throw std::invalid_argument("window_upper_gap: requires i >= 2");
  return make_rational(ExactInt(d) * (c - i + 1), ExactInt(i - 1)) + c;
}

ExactRational window_lower_gap(int d, int c, int i) {
  if (i < 1) throw std::invalid_argument("window_lower_gap: requires i >= 1");
  return make_rational(ExactInt(d) * (c - i), ExactInt(i)) + c;
}

RootBoundCheck outer_upper_check(int v, int k, int d, int i) {
  require_params(v, k, d, "outer_upper_check");
  int c = k - d;
  RootBoundCheck check;
  if (i < 3 || i > c || v < 2 * k) return check;
  AdmissibleWindow win = admissible_window(k, d, i);
  if (!win.upper || ExactRational(v) >= *win.upper) return check;
  check.applicable = true;
  check.bound = s1_root_bound(d, c, i);
  RootOrder order = compare_root(ExactRational(v - k), *check.bound);
  check.passed = order != RootOrder::greater;
  check.equality = order == RootOrder::equal;
  return check;
}

RootBoundCheck outer_lower_check(int v, int k, int d, int i) {
  require_params(v, k, d, "outer_lower_check");
  int c = k - d;
  RootBoundCheck check;
  if (i < 1 || i > c || c < i + 1 || v > 2 * k) return check;
  AdmissibleWindow win = admissible_window(k, d, i);
  if (ExactRational(v) <= win.lower) return check;
  check.applicable = true;
  check.bound = s2_root_bound(d, c, i);
  RootOrder order = compare_root(ExactRational(v - k), *check.bound);
  check.passed = order != RootOrder::less;
  check.equality = order == RootOrder::equal;
  return check;
}

PerfectCodeBounds perfect_code_bounds(int e, int k) {
  if (e < 2) throw std::invalid_argument("perfect_code_bounds: requires e >= 2");
  if (k < 2 * e + 2)
    throw std::invalid_argument("perfect_code_bounds: requires k >= 2e+2");
  PerfectCodeBounds out;
  out.e = e;
  out.k = k;
  out.i = e + 1;
  out.d = k - 2 * e - 1;
  out.c = 2 * e + 1;
  out.d_minimal = (out.d == 1);

  out.radicand_upper =
      ExactInt(e) * (2 * ExactInt(e + 1) * (2 * k - e - 3) * (2 * k - e - 3) -
                     ExactInt(e + 2) * (e - 1) * (e - 1));
  out.radicand_lower =
      ExactInt(e + 1) * (2 * ExactInt(e) * (2 * k - e + 2) * (2 * k - e + 2) -
                         ExactInt(e - 1) * (e + 2) * (e + 2));

  // v <= center_u - sqrt(radicand_upper) / m_u: the smaller root of
  // (x - center_u)^2 = radicand_upper / m_u^2.
  ExactRational center_u =
      make_rational(ExactInt(4) * k * e - (7 * e + 1), ExactInt(2) * (e - 1));
  ExactRational m_u = rat(ExactInt(2) * e * (e - 1));
  out.upper_bound = {ExactRational(1), -2 * center_u,
                     center_u * center_u - rat(out.radicand_upper) / (m_u * m_u),
                     RootSelector::smaller};

  ExactRational center_l = make_rational(ExactInt(4) * k * (e + 1) + (7 * e + 6),
                                         ExactInt(2) * (e + 2));
  ExactRational m_l = rat(ExactInt(2) * (e + 1) * (e + 2));
  out.lower_bound = {ExactRational(1), -2 * center_l,
                     center_l * center_l - rat(out.radicand_lower) / (m_l * m_l),
                     RootSelector::larger};

  out.anticode_upper = make_rational(ExactInt(k - 1) * (2 * e + 1), ExactInt(e));

  ExactInt lo = ceil_root(out.lower_bound);
  ExactInt hi = floor_root(out.upper_bound);
  ExactInt anticode_hi = floor_rational(out.anticode_upper);
  if (anticode_hi < hi) hi = anticode_hi;
  if (lo <= hi) out.admissible_v = std::make_pair(lo, hi);
  return out;
}

bool CRange::contains(const ExactInt& c) const {
  if (lower_int && c < *lower_int) return false;
  if (upper_int && c > *upper_int) return false;
  if (lower_root &&
      compare_root(ExactRational(c), *lower_root) != RootOrder::greater)
    return false;
  if (upper_root &&
      compare_root(ExactRational(c), *upper_root) != RootOrder::less)
    return false;
  return true;
}

CRange c_range_bounds(int i, CRangeMode mode) {
  CRange out;
  switch (mode) {
    case CRangeMode::wide_not_prev: {
      if (i < 3) return out;
      out.applicable = true;
      out.lower_int = ExactInt(2) * (i - 1);
      // c lies strictly below the larger root of
      // (i-2) c^2 - (3i^2-2i) c + 2i^2 (i-1).
      out.upper_root = QuadraticRootBound{
          ExactRational(i - 2), ExactRational(-(3 * ExactInt(i) * i - 2 * i)),
          ExactRational(2 * ExactInt(i) * i * (i - 1)), RootSelector::larger};
      if (i >= 8)
        out.simplified = std::make_pair(ExactInt(2) * (i - 1), ExactInt(2) * i + 6);
      return out;
    }
    case CRangeMode::wide_with_prev: {
      if (i < 9) return out;
      out.applicable = true;
      out.lower_int = ExactInt(2) * (i - 1);
      out.upper_int = ExactInt(2) * i + 4;
      out.simplified = std::make_pair(*out.lower_int, *out.upper_int);
      return out;
    }
    case CRangeMode::narrow_not_next:
    case CRangeMode::narrow_small_c: {
      int min_i = mode == CRangeMode::narrow_not_next ? 18 : 15;
      if (i < min_i) return out;
      out.applicable = true;
      // c lies strictly above the larger root of
      // (i+1) c^2 - (3i-1)(i-1) c + 2i (i-1)^2.
      out.lower_root = QuadraticRootBound{
          ExactRational(i + 1),
          ExactRational(-ExactInt(3 * i - 1) * (i - 1)),
          ExactRational(2 * ExactInt(i) * (i - 1) * (i - 1)),
          RootSelector::larger};
      out.upper_int = ExactInt(2) * i;
      if (mode == CRangeMode::narrow_not_next || i >= 16)
        out.simplified = std::make_pair(ExactInt(2) * i - 8, ExactInt(2) * i);
      return out;
    }
    case CRangeMode::narrow_with_next: {
      if (i < 17) return out;
      out.applicable = true;
      out.lower_int = ExactInt(2) * i - 6;
      out.upper_int = ExactInt(2) * i;
      out.simplified = std::make_pair(*out.lower_int, *out.upper_int);
      return out;
    }
  }
  return out;
}

ExactInt s1_count_poly_direct(int x, int k, int d, int i) {
  if (x < 0)
    throw std::invalid_argument("s1_count_poly_direct: requires x >= 0");
  if (i < 2) throw std::invalid_argument("s1_count_poly_direct: requires i >= 2");
  int c = k - d;
  ExactInt head = 0;
  for (int j = 0; j <= i - 1; ++j)
    head += binomial(k, d + 2 * i - 1 - j) * binomial(x, j);
  ExactInt tail = 0;
  for (int j = 0; j <= i - 3; ++j)
    tail += binomial(k, d + 2 * i - 4 - j) * binomial(x, j);
  ExactInt lead = ExactInt(d + 2 * i - 1) * (d + 2 * i - 2) * (d + 2 * i - 3);
  ExactInt shift = ExactInt(x + c - 2 * i + 4) * (x + c - 2 * i + 3) *
                   (x + c - 2 * i + 2);
  return lead * head - shift * tail;
}

ExactInt s1_count_poly_extended(int x, int k, int d, int i) {
  if (x < 0)
    throw std::invalid_argument("s1_count_poly_extended: requires x >= 0");
  if (i < 2)
    throw std::invalid_argument("s1_count_poly_extended: requires i >= 2");
  int c = k - d;
  ExactInt head = 0;
  for (int j = 0; j <= i - 1; ++j)
    head += binomial(k, d + 2 * i - 1 - j) * binomial(x, j);
  ExactInt tail = 0;
  for (int j = 0; j <= i - 1; ++j)
    tail += binomial(k, d + 2 * i - 4 - j) * binomial(x, j);
  ExactInt lead = ExactInt(d + 2 * i - 1) * (d + 2 * i - 2) * (d + 2 * i - 3);
  ExactInt shift = ExactInt(x + c - 2 * i + 4) * (x + c - 2 * i + 3) *
                   (x + c - 2 * i + 2);
  return lead * head - shift * tail;
}

S1CountCoeffs s1_count_coeffs(int k, int d, int i) {
  if (i < 2) throw std::invalid_argument("s1_count_coeffs: requires i >= 2");
  ExactInt base = binomial(k, d + i - 1);
  ExactInt dd = d;
  ExactInt kk = k;
  ExactInt ii = i;

  S1CountCoeffs out;
  out.p = rat(-(ii - 2) * base);

  ExactInt q_brace = dd * dd * dd - (kk - 6 * i + 7) * dd * dd -
                     ((5 * ii - 6) * kk - (ii - 1) * (9 * ii - 11)) * dd -
                     (ii - 1) * (4 * ii - 5) * kk +
                     (ii - 1) * (2 * ii * ii - 2 * ii - 1);
  out.q = make_rational(-base * q_brace, ExactInt(i - 1));

  ExactInt r_brace =
      (2 * ii - 3) * dd * dd * dd -
      (3 * ii - 4) * (kk - 3 * i + 4) * dd * dd +
      ((ii - 1) * kk * kk - (9 * ii * ii - 23 * ii + 15) * kk +
       (ii - 1) * (12 * ii * ii - 33 * ii + 23)) *
          dd +
      (ii - 1) * (ii - 1) * kk * kk -
      (ii - 1) * (6 * ii * ii - 16 * ii + 11) * kk +
      2 * (2 * ii - 3) * (ii - 1) * (ii - 1) * (ii - 1);
  out.r = make_rational(base * r_brace, ExactInt(i - 1));
  return out;
}

ExactRational s1_count_poly_closed(int x, int k, int d, int i) {
  if (x < 0)
    throw std::invalid_argument("s1_count_poly_closed: requires x >= 0");
  S1CountCoeffs co = s1_count_coeffs(k, d, i);
  ExactRational xr(x);
  return rat(binomial(x, i - 2)) * (co.p * xr * xr + co.q * xr + co.r);
}

ExactRational s1_size_formula(int v, int k, int d, int i, const ExactInt& b) {
  require_params(v, k, d, "s1_size_formula");
  if (i < 2) throw std::invalid_argument("s1_size_formula: requires i >= 2");
  int c = k - d;
  int x = v - k;
  ExactInt den = ExactInt(x + c - 2 * i + 2) * (x + c - 2 * i + 3) *
                 (x + c - 2 * i + 4);
  if (den == 0)
    throw std::domain_error("s1_size_formula: zero denominator");
  return make_rational(b * s1_count_poly_direct(x, k, d, i), den);
}

namespace {

std::string rule_range_detail(int v, int k, int d, int i, bool ok) {
  std::string s = "i <= k-d and d+2i-1 <= v";
  return ok ? s : s + " violated";
}

}  // namespace

FeasibilityReport feasibility_report(int v, int k, int d, int i) {
  require_params(v, k, d, "feasibility_report");
  if (i < 1) throw std::invalid_argument("feasibility_report: requires i >= 1");
  FeasibilityReport report;
  report.v = v;
  report.k = k;
  report.d = d;
  report.i = i;
  const int c = k - d;

  auto add = [&report](const std::string& rule, bool applicable, bool passed,
                       std::string detail) {
    report.checks.push_back({rule, applicable, applicable ? passed : true,
                             std::move(detail)});
  };

  bool range_ok = (i <= c) && (d + 2 * i - 1 <= v);
  add("range", true, range_ok, rule_range_detail(v, k, d, i, range_ok));

  if (!range_ok) {
    add("d-zero", false, true, "");
    add("d-max", false, true, "");
    add("window", false, true, "");
    add("divisibility", false, true, "");
    add("outer-upper", false, true, "");
    add("outer-lower", false, true, "");
    add("c-range-wide", false, true, "");
    add("c-range-narrow", false, true, "");
    add("mod4-endpoint", false, true, "");
    report.feasible = false;
    report.failing_rule = "range";
    return report;
  }

  // d = 0 with i >= 2 forces the two-complementary-blocks shape, so v = 2k.
  bool d0_app = (d == 0 && i >= 2);
  add("d-zero", d0_app, v == 2 * k, d0_app ? "d=0 at level >= 2 requires v = 2k" : "");

  bool dmax_app = (d == k - 1);
  add("d-max", dmax_app, i == 1, dmax_app ? "d = k-1 admits only level 1" : "");

  AdmissibleWindow win = admissible_window(k, d, i);
  report.window = win;
  bool in_window = ExactRational(v) >= win.lower &&
                   (!win.upper || ExactRational(v) <= *win.upper);
  {
    std::string detail = "v in [" + rational_to_string(win.lower) + ", " +
                         (win.upper ? rational_to_string(*win.upper) : "inf") + "]";
    add("window", true, in_window, detail);
  }

  BlockCountBound bound = block_count_bound(v, k, d, i);
  report.bound = bound;
  add("divisibility", true, bound.divisible,
      "b_max = " + rational_to_string(bound.b_max));

  bool at_upper = win.upper && ExactRational(v) == *win.upper;
  bool at_lower = ExactRational(v) == win.lower;

  RootBoundCheck upper_check = outer_upper_check(v, k, d, i);
  {
    std::string detail;
    if (upper_check.applicable) {
      detail = "v-k vs smaller root " + approximate_root(*upper_check.bound, 4);
      report.gamma_annotation += "gamma1=" + approximate_root(*upper_check.bound, 4);
    }
    add("outer-upper", upper_check.applicable, upper_check.passed, detail);
  }

  RootBoundCheck lower_check = outer_lower_check(v, k, d, i);
  {
    std::string detail;
    if (lower_check.applicable) {
      detail = "v-k vs larger root " + approximate_root(*lower_check.bound, 4);
      if (!report.gamma_annotation.empty()) report.gamma_annotation += ";";
      report.gamma_annotation += "gamma2=" + approximate_root(*lower_check.bound, 4);
    }
    add("outer-lower", lower_check.applicable, lower_check.passed, detail);
  }

  {
    bool app = false, passed = true;
    std::string detail;
    if (i >= 3 && v >= 2 * k && win.upper && ExactRational(v) < *win.upper) {
      app = true;
      if (!c_range_bounds(i, CRangeMode::wide_not_prev).contains(c)) {
        passed = false;
        detail = "c outside the open upper range";
      }
    }
    if (i >= 9 && v >= 2 * k && at_upper && d > 0) {
      app = true;
      if (!c_range_bounds(i, CRangeMode::wide_with_prev).contains(c)) {
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += "c outside [2(i-1), 2i+4]";
      }
    }
    add("c-range-wide", app, passed, detail);
  }

  {
    bool app = false, passed = true;
    std::string detail;
    bool narrow = v <= 2 * k && c >= i + 2;
    if (narrow && !at_lower) {
      for (CRangeMode mode :
           {CRangeMode::narrow_not_next, CRangeMode::narrow_small_c}) {
        CRange range = c_range_bounds(i, mode);
        if (!range.applicable) continue;
        app = true;
        if (!range.contains(c)) {
          passed = false;
          detail = "c outside the narrow-side range";
        }
      }
    }
    if (narrow && at_lower && d > 0 && i >= 17) {
      app = true;
      if (!c_range_bounds(i, CRangeMode::narrow_with_next).contains(c)) {
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += "c outside [2i-6, 2i]";
      }
    }
    add("c-range-narrow", app, passed, detail);
  }

  {
    // Hitting a window endpoint makes the design verify at two consecutive
    // levels j and j+1; no such pair exists when j = 2 mod 4 and d > 0.
    bool app = d > 0 && (at_upper || at_lower);
    bool passed = true;
    std::string detail;
    if (app) {
      int j = at_upper ? i - 1 : i;
      passed = (j % 4) != 2;
      detail = "levels " + std::to_string(j) + " and " + std::to_string(j + 1) +
               " would hold together";
    }
    add("mod4-endpoint", app, passed, detail);
  }

  report.feasible = true;
  for (const FeasibilityCheck& check : report.checks) {
    if (check.applicable && !check.passed) {
      report.feasible = false;
      report.failing_rule = check.rule;  // later rules are more specific
    }
  }
  return report;
}

}  // namespace betadesign
