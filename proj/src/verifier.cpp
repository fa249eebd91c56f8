#include "betadesign/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "betadesign/binomial.hpp"
#include "betadesign/subsets.hpp"

namespace betadesign {

namespace {

void check_cap(int v, int t, const EnumLimits& limits, const char* op) {
  if (choose64(v, t) > limits.max_subsets)
    throw EnumerationCapError(std::string(op) +
                              ": subset count exceeds cap, raise max_subsets");
}

}  // namespace

BetaVerdict is_beta_i(const Design& design, int i, const EnumLimits& limits) {
  DesignParameters p = extract_parameters(design);
  if (i < 1 || i > p.c)
    throw std::invalid_argument("is_beta_i: requires 1 <= i <= k-d");
  int subset_size = p.d + 2 * i - 1;
  if (subset_size > p.v)
    throw std::invalid_argument("is_beta_i: subset size d+2i-1 exceeds v");
  check_cap(p.v, subset_size, limits, "is_beta_i");

  const int threshold = p.d + i;
  const std::uint64_t total = choose64(p.v, subset_size);
  std::atomic<std::uint64_t> least_witness{total};
  std::atomic<bool> uniqueness_violated{false};

  for_each_rank_chunk(
      p.v, subset_size, limits.jobs,
      [&](std::uint64_t first, std::uint64_t last) {
        CombinationCursor cur = unrank_combination(p.v, subset_size, first);
        for (std::uint64_t rank = first; rank < last; ++rank) {
          if (rank >= least_witness.load(std::memory_order_relaxed)) return;
          int covers = 0;
          for (Block b : design.blocks) {
            if (std::popcount(cur.mask & b) >= threshold && ++covers == 2) break;
          }
          if (covers != 1) {
            if (covers >= 2) uniqueness_violated.store(true);
            std::uint64_t seen = least_witness.load(std::memory_order_relaxed);
            while (rank < seen &&
                   !least_witness.compare_exchange_weak(seen, rank)) {
            }
            return;
          }
          next_combination(cur);
        }
      });

  if (uniqueness_violated.load())
    throw std::logic_error(
        "is_beta_i: subset met two blocks above the threshold, which "
        "contradicts the extracted intersection number");

  BetaVerdict verdict;
  verdict.i = i;
  verdict.subsets_total = total;
  std::uint64_t witness_rank = least_witness.load();
  if (witness_rank == total) {
    verdict.holds = true;
    verdict.covered_exactly_once = total;
    return verdict;
  }
  verdict.holds = false;
  verdict.covered_exactly_once = witness_rank;
  CombinationCursor cur = unrank_combination(p.v, subset_size, witness_rank);
  BetaWitness w;
  w.points = cur.points;
  w.rank = witness_rank;
  w.cover_count = 0;
  for (Block b : design.blocks)
    if (std::popcount(cur.mask & b) >= threshold) ++w.cover_count;
  verdict.witness = std::move(w);
  return verdict;
}

long long mu_d_bruteforce(const Design& design, Block b) {
  DesignParameters p = extract_parameters(design);
  if (std::find(design.blocks.begin(), design.blocks.end(), b) ==
      design.blocks.end())
    throw std::invalid_argument("mu_d_bruteforce: block not in design");
  long long count = 0;
  for (Block other : design.blocks) {
    if (other == b) continue;
    if (std::popcount(other & b) == p.d) ++count;
  }
  return count;
}

ExactRational mu_d_formula(const DesignParameters& params, int i) {
  if (i < 1 || i > params.c)
    throw std::invalid_argument("mu_d_formula: requires 1 <= i <= k-d");
  ExactInt num = binomial(params.v - params.k, i) *
                 binomial(params.k, params.d + i - 1);
  ExactInt den = binomial(params.c, i) * binomial(params.c, i - 1);
  if (den == 0)
    throw std::invalid_argument("mu_d_formula: zero denominator");
  return make_rational(num, den);
}

AlphaDistribution enumerate_family(const Design& design, int i,
                                   SubsetFamily family,
                                   const EnumLimits& limits) {
  DesignParameters p = extract_parameters(design);
  if (i < 1 || i > p.c)
    throw std::invalid_argument("enumerate_family: requires 1 <= i <= k-d");
  int member_size, bound;
  if (family == SubsetFamily::S1) {
    if (i < 2) throw std::invalid_argument("enumerate_family: S1 needs i >= 2");
    member_size = p.d + 2 * (i - 2);
    bound = p.d + i - 2;
  } else {
    if (p.c < i + 1)
      throw std::invalid_argument("enumerate_family: S2 needs k-d >= i+1");
    member_size = p.d + 2 * (i + 1);
    bound = p.d + i + 1;
  }
  if (member_size < 0 || member_size > p.v)
    throw std::invalid_argument("enumerate_family: member size outside [0, v]");
  check_cap(p.v, member_size, limits, "enumerate_family");

  std::mutex merge_mutex;
  std::map<long long, std::uint64_t> histogram;

  for_each_rank_chunk(
      p.v, member_size, limits.jobs,
      [&](std::uint64_t first, std::uint64_t last) {
        std::map<long long, std::uint64_t> local;
        CombinationCursor cur = unrank_combination(p.v, member_size, first);
        for (std::uint64_t rank = first; rank < last; ++rank) {
          long long alpha = 0;
          bool member = true;
          for (Block b : design.blocks) {
            int meet = std::popcount(cur.mask & b);
            if (meet > bound) {
              member = false;
              break;
            }
            if (meet == bound) ++alpha;
          }
          if (member) ++local[alpha];
          next_combination(cur);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (const auto& [alpha, count] : local) histogram[alpha] += count;
      });

  AlphaDistribution dist;
  dist.family = family;
  dist.member_size = member_size;
  dist.counting_level = bound;
  dist.histogram = std::move(histogram);
  for (const auto& [alpha, count] : dist.histogram) {
    dist.n += count;
    dist.P += ExactInt(alpha) * count;
    dist.Q += ExactInt(alpha) * (alpha - 1) * count;
  }
  return dist;
}

AlphaAverageResult s1_alpha_average_check(const Design& design, int i,
                                          const EnumLimits& limits) {
  if (i < 2)
    throw std::invalid_argument("s1_alpha_average_check: requires i >= 2");
  DesignParameters p = extract_parameters(design);
  AlphaDistribution dist = enumerate_family(design, i, SubsetFamily::S1, limits);
  if (dist.n == 0)
    throw std::invalid_argument("s1_alpha_average_check: the S1 family is empty");

  AlphaAverageResult result;
  result.n = dist.n;
  result.lhs = make_rational(
      ExactInt(p.b) * binomial(p.k, p.d + i - 2) * binomial(p.v - p.k, i - 2),
      ExactInt(dist.n));
  ExactInt num = ExactInt(i - 1) * (p.v - p.k - i + 1) * (p.v - p.k - i + 2);
  ExactInt den = ExactInt(p.d + i - 1) * (p.c - i + 1) * (p.c - i + 2);
  result.rhs = 1 + make_rational(num, den);
  result.equality = result.lhs == result.rhs;
  if (result.lhs > result.rhs)
    throw std::logic_error(
        "s1_alpha_average_check: average exceeded its cap; the design is "
        "not actually verified at this level");
  return result;
}

ExactInt tdesign_indicator(int v, int k, int d, int i, int t) {
  ExactInt value = 0;
  for (int j = 0; j <= i - 1; ++j) {
    ExactInt inner = 0;
    for (int s = 0; s <= i - j - 1; ++s)
      inner += binomial(k - t + j - 1, d - t + 2 * i - 2 - s) *
               binomial(v - k - j, s);
    ExactInt term = binomial(t + 1, j) * inner;
    value += (j % 2 == 0) ? term : -term;
  }
  return value;
}

TDesignRootScan tdesign_polynomial_roots(int v, int k, int d, int i) {
  if (!(0 <= d && d < k && k < v))
    throw std::invalid_argument("tdesign_polynomial_roots: requires d < k < v");
  if (i < 1 || i > k - d)
    throw std::invalid_argument("tdesign_polynomial_roots: requires 1 <= i <= k-d");
  TDesignRootScan scan;
  scan.degenerate = (i == 1);
  for (int t = 1; t <= k; ++t) {
    scan.values.push_back(tdesign_indicator(v, k, d, i, t));
    if (scan.values.back() == 0) scan.roots.push_back(t);
  }
  if (!scan.roots.empty()) scan.smallest = scan.roots.front();
  return scan;
}

TDesignRootScan tdesign_polynomial_roots(const DesignParameters& params, int i) {
  return tdesign_polynomial_roots(params.v, params.k, params.d, i);
}

}  // namespace betadesign
