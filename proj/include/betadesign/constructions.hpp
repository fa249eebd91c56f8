#pragma once

#include "betadesign/design.hpp"

namespace betadesign {

/// The 759 weight-8 words of the binary lexicode of length 24 and minimum
/// distance 8, built by scanning all 24-bit words in increasing order.  The
/// retained words are checked to form a linear [24,12,8] code of size 4096
/// before the octads are extracted; any violation throws std::logic_error.
Design steiner_5_8_24();

/// The seven lines of the projective plane of order 2 on points 0..6.
Design fano_plane();

/// Two disjoint blocks {0..k-1} and {k..2k-1}; requires 2 <= k <= 32.
Design pair_design(int k);

/// All k-subsets of {0..v-1}; requires 1 < k < v and a block count within
/// the cap.
Design complete_design(int v, int k, std::uint64_t max_blocks = 1048576);

}  // namespace betadesign
