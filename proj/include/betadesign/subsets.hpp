#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "betadesign/design.hpp"

namespace betadesign {

/// C(n, k) in native 64-bit arithmetic; exact for n <= 64.
std::uint64_t choose64(int n, int k);

/// Walks the size-t subsets of {0..n-1} in lexicographic order of their
/// ascending point lists.  t = 0 yields the single empty subset.
struct CombinationCursor {
  int n = 0;
  int t = 0;
  std::vector<int> points;
  Block mask = 0;
};

CombinationCursor first_combination(int n, int t);

/// Advances to the lexicographic successor; false once exhausted.
bool next_combination(CombinationCursor& cur);

/// Cursor positioned at the combination of the given lexicographic rank.
CombinationCursor unrank_combination(int n, int t, std::uint64_t rank);

/// Runs body(chunk_first_rank, chunk_last_rank_exclusive) on worker threads,
/// splitting [0, choose64(n, t)) into contiguous ranges.  jobs = 0 picks the
/// hardware concurrency.  body must be safe to run concurrently.
void for_each_rank_chunk(int n, int t, unsigned jobs,
                         const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace betadesign
