#include "betadesign/subsets.hpp"

#include <stdexcept>
#include <thread>

namespace betadesign {

std::uint64_t choose64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Values stay within uint64 for n <= 64 up to C(64, 32).
  std::uint64_t result = 1;
  for (int t = 1; t <= k; ++t) {
    result = result * static_cast<std::uint64_t>(n - k + t) /
             static_cast<std::uint64_t>(t);
  }
  return result;
}

CombinationCursor first_combination(int n, int t) {
  if (t < 0 || n < 0 || t > n)
    throw std::invalid_argument("first_combination: requires 0 <= t <= n");
  CombinationCursor cur;
  cur.n = n;
  cur.t = t;
  cur.points.resize(t);
  for (int j = 0; j < t; ++j) {
    cur.points[j] = j;
    cur.mask |= Block{1} << j;
  }
  return cur;
}

bool next_combination(CombinationCursor& cur) {
  int t = cur.t;
  if (t == 0) return false;
  int j = t - 1;
  while (j >= 0 && cur.points[j] == cur.n - t + j) --j;
  if (j < 0) return false;
  int value = cur.points[j];
  for (int l = j; l < t; ++l) {
    cur.mask &= ~(Block{1} << cur.points[l]);
    cur.points[l] = ++value;
    cur.mask |= Block{1} << value;
  }
  return true;
}

CombinationCursor unrank_combination(int n, int t, std::uint64_t rank) {
  if (t < 0 || n < 0 || t > n)
    throw std::invalid_argument("unrank_combination: requires 0 <= t <= n");
  CombinationCursor cur;
  cur.n = n;
  cur.t = t;
  cur.points.reserve(t);
  int x = 0;
  for (int j = 0; j < t; ++j) {
    // Count combinations whose element at position j equals each candidate.
    while (true) {
      std::uint64_t with_x = choose64(n - x - 1, t - j - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    cur.points.push_back(x);
    cur.mask |= Block{1} << x;
    ++x;
  }
  return cur;
}

void for_each_rank_chunk(
    int n, int t, unsigned jobs,
    const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  std::uint64_t total = choose64(n, t);
  if (total == 0) return;
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs == 1 || total < 4096) {
    body(0, total);
    return;
  }
  std::uint64_t per = (total + jobs - 1) / jobs;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t first = per * w;
    if (first >= total) break;
    std::uint64_t last = std::min(total, first + per);
    workers.emplace_back([&body, first, last] { body(first, last); });
  }
  for (auto& th : workers) th.join();
}

}  // namespace betadesign
