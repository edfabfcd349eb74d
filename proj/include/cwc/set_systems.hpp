#pragma once

#include <cstdint>
#include <vector>

#include "cwc/error.hpp"
#include "cwc/words.hpp"

namespace cwc {

struct SetSystem {
    int point_count = 0;
    std::vector<std::vector<int>> blocks;
    // Nonempty only for group-divisible systems; groups partition the points.
    std::vector<std::vector<int>> groups;
};

// Sorts each block, then the block list; throws ValidationError on points
// outside [0, point_count) or on repeated blocks/points.
void canonicalize(SetSystem& s);

bool uniform(const SetSystem& s, int k);

// Number of blocks the two systems share (as sets of points).
std::size_t intersection_size(const SetSystem& a, const SetSystem& b);

// Incidence-vector code of a k-uniform system: q = 2, weight k, and the
// claimed distance is the true minimum over block pairs, 2(k - max overlap).
Code packing_code_convert(const SetSystem& s);

// Supports of a binary code as blocks.
SetSystem packing_code_convert(const Code& c);

// Packs a block with points < 256 and size <= 8 into one comparable key.
std::uint64_t block_key(const std::vector<int>& block);

}  // namespace cwc
