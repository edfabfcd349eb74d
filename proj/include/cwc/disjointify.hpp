#pragma once

#include <cstdint>
#include <vector>

#include "cwc/set_systems.hpp"

namespace cwc {

struct DisjointifyOptions {
    // Return what was found instead of throwing when the budget runs out.
    bool allow_partial = false;
    // When nonempty, every permutation keeps this point set stable setwise.
    std::vector<int> fixed_setwise;
    // When >= 0, blocks of different copies may share at most this many
    // points (plain disjointness only requires the block sets to differ).
    int max_cross_overlap = -1;
    // Plateau moves tolerated before the current permutation is rerandomized.
    int stall_limit = 1000;
};

struct DisjointifyResult {
    std::vector<SetSystem> systems;
    bool complete = false;
    std::uint64_t moves_used = 0;
    // True when |blocks|^s < C(n, k), which already guarantees s pairwise
    // disjoint copies exist; reported for diagnostics either way.
    bool cor2_sufficient = false;
};

// Searches for s pairwise block-disjoint images of seed_system under point
// permutations (the first image is the seed itself). Hill climbing on the
// collision count with transposition moves and randomized restarts; budget
// counts proposed moves. Throws BudgetError on exhaustion (which does not
// prove nonexistence) unless allow_partial is set.
DisjointifyResult disjointify(const SetSystem& seed_system, int s, std::uint64_t seed,
                              std::uint64_t budget, const DisjointifyOptions& opts = {});

}  // namespace cwc
