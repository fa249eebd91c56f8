#pragma once

#include "betadesign/design.hpp"
#include "betadesign/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace betadesign {

/// Caps and worker count for brute-force subset enumeration.
struct EnumLimits {
  std::uint64_t max_subsets = 100000000ULL;
  unsigned jobs = 0;  // 0 picks hardware concurrency
};

/// Thrown when an enumeration would exceed EnumLimits::max_subsets.
struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BetaWitness {
  std::vector<int> points;
  int cover_count = 0;        // 0 here; 2+ would violate the pairwise bound
  std::uint64_t rank = 0;     // lexicographic rank of the witness subset
};

struct BetaVerdict {
  int i = 0;
  bool holds = false;
  std::optional<BetaWitness> witness;
  /// Subsets confirmed to meet exactly one block: all of them when the
  /// verdict holds, otherwise every subset before the least witness.
  std::uint64_t covered_exactly_once = 0;
  std::uint64_t subsets_total = 0;
};

/// Tests whether every (d + 2i - 1)-subset of points meets exactly one block
/// in at least d + i points.  The witness, if any, is the lexicographically
/// least failing subset.  A subset meeting two blocks that deeply would
/// contradict the extracted intersection number and throws std::logic_error.
BetaVerdict is_beta_i(const Design& design, int i, const EnumLimits& limits = {});

/// Number of blocks meeting b in exactly d points, counted directly.
long long mu_d_bruteforce(const Design& design, Block b);

/// C(v-k, i) * C(k, d+i-1) / (C(c, i) * C(c, i-1)); requires 1 <= i <= c.
ExactRational mu_d_formula(const DesignParameters& params, int i);

/// S1: subsets of size d + 2(i-2) meeting every block in at most d+i-2
/// points.  S2: size d + 2(i+1), every block at most d+i+1.
enum class SubsetFamily { S1, S2 };

struct AlphaDistribution {
  SubsetFamily family = SubsetFamily::S1;
  int member_size = 0;
  int counting_level = 0;  // alpha counts blocks met in exactly this many points
  std::map<long long, std::uint64_t> histogram;  // alpha value -> members
  std::uint64_t n = 0;     // family size
  ExactInt P = 0;          // sum of alpha over the family
  ExactInt Q = 0;          // sum of alpha * (alpha - 1)
  bool alpha_constant() const { return histogram.size() <= 1; }
};

AlphaDistribution enumerate_family(const Design& design, int i,
                                   SubsetFamily family,
                                   const EnumLimits& limits = {});

/// Upper bound on the average alpha over S1.  lhs is (b/n) * C(k, d+i-2) *
/// C(v-k, i-2); rhs is the closed-form cap.  Assumes the design has been
/// verified at level i (i >= 2).  Throws std::logic_error if lhs > rhs.
struct AlphaAverageResult {
  ExactRational lhs;
  ExactRational rhs;
  bool equality = false;  // lhs == rhs; alpha is then constant over S1
  std::uint64_t n = 0;
};

AlphaAverageResult s1_alpha_average_check(const Design& design, int i,
                                          const EnumLimits& limits = {});

/// Values of the t-design indicator polynomial at t = 1..k, its integer
/// zeros, and the smallest zero.  A design verified at level i is a
/// t-design for the smallest zero t.  For i = 1 the indicator degenerates
/// and the smallest zero is always d + 1; the flag marks that case.
struct TDesignRootScan {
  std::vector<ExactInt> values;  // index t-1 holds the value at t
  std::vector<int> roots;
  std::optional<int> smallest;
  bool degenerate = false;
};

ExactInt tdesign_indicator(int v, int k, int d, int i, int t);
TDesignRootScan tdesign_polynomial_roots(int v, int k, int d, int i);
TDesignRootScan tdesign_polynomial_roots(const DesignParameters& params, int i);

}  // namespace betadesign
