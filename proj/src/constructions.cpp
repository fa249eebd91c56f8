#include "betadesign/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "betadesign/subsets.hpp"

namespace betadesign {

namespace {

/// GF(2) rank of a list of bit vectors.
int gf2_rank(std::vector<std::uint32_t> words) {
  int rank = 0;
  for (int bit = 23; bit >= 0; --bit) {
    std::uint32_t mask = std::uint32_t{1} << bit;
    size_t pivot = rank;
    while (pivot < words.size() && !(words[pivot] & mask)) ++pivot;
    if (pivot == words.size()) continue;
    std::swap(words[rank], words[pivot]);
    for (size_t j = 0; j < words.size(); ++j)
      if (j != static_cast<size_t>(rank) && (words[j] & mask))
        words[j] ^= words[rank];
    ++rank;
  }
  return rank;
}

}  // namespace

Design steiner_5_8_24() {
  std::vector<std::uint32_t> code;
  code.reserve(4096);
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << 24); ++w) {
    bool keep = true;
    // Recently accepted words are numerically closest, so scanning backwards
    // finds a distance violation almost immediately for rejected words.
    for (auto it = code.rbegin(); it != code.rend(); ++it) {
      if (std::popcount(w ^ *it) < 8) {
        keep = false;
        break;
      }
    }
    if (keep) code.push_back(w);
  }

  if (code.size() != 4096)
    throw std::logic_error("lexicode: expected 4096 words, got " +
                           std::to_string(code.size()));
  if (gf2_rank(code) != 12)
    throw std::logic_error("lexicode: retained words do not span a 12-dim code");

  std::vector<Block> octads;
  octads.reserve(759);
  for (std::uint32_t w : code)
    if (std::popcount(w) == 8) octads.push_back(static_cast<Block>(w));
  if (octads.size() != 759)
    throw std::logic_error("lexicode: expected 759 octads, got " +
                           std::to_string(octads.size()));
  return make_design(24, std::move(octads));
}

Design fano_plane() {
  // Lines generated by translating the difference set {0, 1, 3} mod 7.
  std::vector<std::vector<int>> lines;
  for (int s = 0; s < 7; ++s) {
    std::vector<int> line = {s % 7, (s + 1) % 7, (s + 3) % 7};
    std::sort(line.begin(), line.end());
    lines.push_back(line);
  }
  Design plane = design_from_point_lists(7, lines);
  DesignParameters p = extract_parameters(plane);
  if (p.d != 1 || p.b != 7)
    throw std::logic_error("fano_plane: parameter check failed");
  auto lambda = is_t_design(plane, 2);
  if (!lambda || *lambda != 1)
    throw std::logic_error("fano_plane: not a 2-design with lambda 1");
  return plane;
}

Design pair_design(int k) {
  if (k < 2 || k > 32)
    throw std::invalid_argument("pair_design: requires 2 <= k <= 32");
  Block low = (Block{1} << k) - 1;
  Design design = make_design(2 * k, {low, low << k});
  if (extract_parameters(design).d != 0)
    throw std::logic_error("pair_design: blocks are not disjoint");
  return design;
}

Design complete_design(int v, int k, std::uint64_t max_blocks) {
  if (v < 2 || v > kMaxPoints || k <= 1 || k >= v)
    throw std::invalid_argument("complete_design: requires 1 < k < v <= 64");
  if (choose64(v, k) > max_blocks)
    throw std::runtime_error("complete_design: block count exceeds cap");
  std::vector<Block> blocks;
  blocks.reserve(choose64(v, k));
  CombinationCursor cur = first_combination(v, k);
  do {
    blocks.push_back(cur.mask);
  } while (next_combination(cur));
  Design design = make_design(v, std::move(blocks));
  if (extract_parameters(design).d != k - 1)
    throw std::logic_error("complete_design: intersection check failed");
  return design;
}

}  // namespace betadesign
