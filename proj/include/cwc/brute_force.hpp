#pragma once

#include <cstdint>

#include "cwc/words.hpp"

namespace cwc {

struct BruteForceResult {
    Code witness;
    // True when the search space was exhausted, so the witness is a maximum
    // code. False when the node budget ran out first.
    bool completed = false;
    std::uint64_t nodes_explored = 0;
};

// Exact A_q(n,d,w) oracle at tiny scale: branch-and-bound maximum clique on
// the graph whose vertices are all weight-w words and whose edges join pairs
// at distance >= d. Deterministic: vertices are visited in lexicographic
// word order. Guarded to C(n,w)(q-1)^w <= 100000 vertices.
BruteForceResult brute_force_max(int n, int d, int w, int q,
                                 std::uint64_t node_budget = 50'000'000);

}  // namespace cwc
