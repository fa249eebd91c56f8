#include "betadesign/design.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "betadesign/subsets.hpp"

namespace betadesign {

int Design::block_size() const {
  if (blocks.empty()) return 0;
  return std::popcount(blocks.front());
}

bool block_lex_less(Block a, Block b) {
  Block diff = a ^ b;
  if (diff == 0) return false;
  // The block containing the lowest differing point is the lexicographically
  // smaller ascending point list (blocks always have equal popcount here).
  Block low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<int> block_points(Block b) {
  std::vector<int> points;
  while (b) {
    int p = std::countr_zero(b);
    points.push_back(p);
    b &= b - 1;
  }
  return points;
}

Block block_from_points(const std::vector<int>& points, int v) {
  Block b = 0;
  int prev = -1;
  for (int p : points) {
    if (p < 0 || p >= v)
      throw DesignFormatError("block point out of range [0, v)");
    if (p <= prev)
      throw DesignFormatError("block points must be strictly increasing");
    prev = p;
    b |= Block{1} << p;
  }
  return b;
}

Design make_design(int v, std::vector<Block> blocks) {
  if (v < 2 || v > kMaxPoints)
    throw DesignFormatError("v must lie in [2, 64]");
  if (blocks.empty()) throw DesignFormatError("design needs at least one block");
  Block universe = v == 64 ? ~Block{0} : (Block{1} << v) - 1;
  int k = std::popcount(blocks.front());
  if (k <= 0 || k >= v)
    throw DesignFormatError("block size must satisfy 0 < k < v");
  for (Block b : blocks) {
    if ((b & ~universe) != 0)
      throw DesignFormatError("block uses a point outside [0, v)");
    if (std::popcount(b) != k)
      throw DesignFormatError("all blocks must have the same size");
  }
  std::sort(blocks.begin(), blocks.end(), block_lex_less);
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw DesignFormatError("duplicate block");
  return Design{v, std::move(blocks)};
}

Design design_from_point_lists(int v, const std::vector<std::vector<int>>& lists) {
  std::vector<Block> blocks;
  blocks.reserve(lists.size());
  for (const auto& points : lists) blocks.push_back(block_from_points(points, v));
  return make_design(v, std::move(blocks));
}

DesignParameters extract_parameters(const Design& design) {
  if (design.blocks.size() < 2)
    throw std::invalid_argument(
        "extract_parameters: intersection number needs at least two blocks");
  int d = 0;
  for (size_t i = 0; i < design.blocks.size(); ++i)
    for (size_t j = i + 1; j < design.blocks.size(); ++j)
      d = std::max(d, std::popcount(design.blocks[i] & design.blocks[j]));
  DesignParameters p;
  p.v = design.v;
  p.k = design.block_size();
  p.d = d;
  p.b = design.block_count();
  p.c = p.k - d;
  p.diameter = p.c + 1;
  return p;
}

Design complement_design(const Design& design) {
  Block universe =
      design.v == 64 ? ~Block{0} : (Block{1} << design.v) - 1;
  std::vector<Block> blocks;
  blocks.reserve(design.blocks.size());
  for (Block b : design.blocks) blocks.push_back(universe & ~b);
  return make_design(design.v, std::move(blocks));
}

std::optional<long long> is_t_design(const Design& design, int t,
                                     std::uint64_t max_subsets) {
  int k = design.block_size();
  if (t < 1 || t > k)
    throw std::invalid_argument("is_t_design: requires 1 <= t <= k");
  if (choose64(design.v, t) > max_subsets)
    throw std::runtime_error("is_t_design: subset count exceeds cap");
  long long lambda = -1;
  CombinationCursor cur = first_combination(design.v, t);
  do {
    long long count = 0;
    for (Block b : design.blocks)
      if ((cur.mask & b) == cur.mask) ++count;
    if (lambda < 0)
      lambda = count;
    else if (lambda != count)
      return std::nullopt;
  } while (next_combination(cur));
  return lambda;
}

std::map<int, long long> intersection_histogram(const Design& design, Block b) {
  if (std::find(design.blocks.begin(), design.blocks.end(), b) ==
      design.blocks.end())
    throw std::invalid_argument("intersection_histogram: block not in design");
  std::map<int, long long> hist;
  for (Block other : design.blocks) {
    if (other == b) continue;
    ++hist[std::popcount(other & b)];
  }
  return hist;
}

Design parse_design(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DesignFormatError(e.what(), static_cast<long long>(e.byte));
  }
  if (!doc.is_object() || !doc.contains("v") || !doc.contains("blocks"))
    throw DesignFormatError("expected an object with \"v\" and \"blocks\"");
  if (!doc["v"].is_number_integer())
    throw DesignFormatError("\"v\" must be an integer");
  if (!doc["blocks"].is_array())
    throw DesignFormatError("\"blocks\" must be an array");
  int v = doc["v"].get<int>();
  std::vector<std::vector<int>> lists;
  for (const auto& item : doc["blocks"]) {
    if (!item.is_array()) throw DesignFormatError("each block must be an array");
    std::vector<int> points;
    for (const auto& p : item) {
      if (!p.is_number_integer())
        throw DesignFormatError("block points must be integers");
      points.push_back(p.get<int>());
    }
    lists.push_back(std::move(points));
  }
  return design_from_point_lists(v, lists);
}

Design load_design(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DesignFormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_design(buf.str());
}

std::string serialize_design(const Design& design) {
  std::ostringstream out;
  out << "{\"v\": " << design.v << ", \"blocks\": [\n";
  for (size_t i = 0; i < design.blocks.size(); ++i) {
    out << "[";
    std::vector<int> points = block_points(design.blocks[i]);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j) out << ",";
      out << points[j];
    }
    out << "]";
    if (i + 1 < design.blocks.size()) out << ",";
    out << "\n";
  }
  out << "]}\n";
  return out.str();
}

void save_design(const Design& design, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_design(design);
}

}  // namespace betadesign
