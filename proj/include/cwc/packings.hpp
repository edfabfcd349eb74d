#pragma once

#include <cstdint>
#include <optional>

#include "cwc/set_systems.hpp"

namespace cwc {

// Greedy maximal packing: w-subsets of [n] are taken in lexicographic order
// (or shuffled by the seed when one is given) and kept whenever every
// t-subset inside stays covered at most lambda times. max_block_overlap, if
// set, additionally rejects blocks sharing more than that many points with
// an accepted block; the result is then maximal under both constraints.
SetSystem greedy_packing(int n, int w, int t, int lambda,
                         std::optional<std::uint64_t> seed = std::nullopt,
                         int max_block_overlap = -1);

// Exhaustive check that every t-subset is covered at most lambda times.
void validate_packing(const SetSystem& s, int t, int lambda);

// The 13-block 2-(13,4,1) design from the cyclic translates of {0,1,3,9},
// pair coverage verified on construction.
SetSystem design_13_4();

}  // namespace cwc
