#pragma once

#include "betadesign/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace betadesign {

/// A block as a bit mask over at most 64 points; intersections are popcounts.
using Block = std::uint64_t;

constexpr int kMaxPoints = 64;

/// Thrown when a design file or JSON document is malformed.  byte_offset is
/// the position the parser stopped at, or -1 for structural errors.
struct DesignFormatError : std::runtime_error {
  explicit DesignFormatError(const std::string& msg, long long offset = -1)
      : std::runtime_error(msg), byte_offset(offset) {}
  long long byte_offset;
};

/// Point set {0..v-1} plus a duplicate-free list of equally sized blocks,
/// kept sorted in lexicographic order of their ascending point lists.
struct Design {
  int v = 0;
  std::vector<Block> blocks;

  int block_size() const;
  long long block_count() const { return static_cast<long long>(blocks.size()); }
};

struct DesignParameters {
  int v = 0;
  int k = 0;
  int d = 0;      // largest pairwise block intersection
  long long b = 0;
  int c = 0;      // k - d
  int diameter = 0;  // k - d + 1
};

/// True when a precedes b in lexicographic order of ascending point lists.
bool block_lex_less(Block a, Block b);

std::vector<int> block_points(Block b);
Block block_from_points(const std::vector<int>& points, int v);

/// Validates sizes and duplicates, sorts blocks canonically.
Design make_design(int v, std::vector<Block> blocks);
Design design_from_point_lists(int v, const std::vector<std::vector<int>>& lists);

/// Requires at least two blocks; d is scanned over all pairs.
DesignParameters extract_parameters(const Design& design);

/// Replaces every block by its complement in the point set.
Design complement_design(const Design& design);

/// Occurrence count lambda if every t-subset of points lies in the same
/// number of blocks, empty otherwise.  Requires 1 <= t <= k.
std::optional<long long> is_t_design(const Design& design, int t,
                                     std::uint64_t max_subsets = 100000000ULL);

/// Histogram of |B ∩ C| over all blocks C other than B.
std::map<int, long long> intersection_histogram(const Design& design, Block b);

/// Canonical JSON: {"v": <int>, "blocks": [[points ascending], ...]}.
Design parse_design(const std::string& text);
Design load_design(const std::string& path);
std::string serialize_design(const Design& design);
void save_design(const Design& design, const std::string& path);

}  // namespace betadesign
