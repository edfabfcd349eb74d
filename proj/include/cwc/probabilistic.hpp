#pragma once

#include <cstdint>
#include <optional>

#include "cwc/set_systems.hpp"
#include "cwc/words.hpp"

namespace cwc {

// Outcome of one randomized construction run. conflicts_found counts
// ordered pairs of words at distance below d before any deletion, the same
// normalization as the expectation bound below.
struct ProbabilisticRun {
    SetSystem packing;
    std::uint64_t seed = 0;
    int lambda = 0;
    int t = 0;
    std::uint64_t conflicts_found = 0;
    std::size_t deleted = 0;
    Code final;
};

// Covering multiplicity balancing packing size against expected deletions:
// max(1, floor(((q-1)^p / C(w,t) + 1) / 2)) with p = t for odd d and t-1
// for even d. Saturates at 10^9.
int default_lambda(int d, int w, int q);

// lambda(lambda-1) C(t,f) / (q-1)^f * C(n,t) with t = ceil((2w-d+1)/2) and
// f = floor((2w-d+1)/2): an upper bound on the expected conflicts_found for
// any packing probabilistic_construct can build.
double conflict_expectation_bound(int n, int d, int w, int q, int lambda);

// Greedy t-(n,w,lambda) packing with pairwise block overlap capped at t,
// uniform random nonzero symbols on every support coordinate, then repeated
// deletion of a maximum-conflict word (ties to the lexicographically
// smallest) until the survivors verify at distance d. lambda defaults to
// default_lambda when unset.
ProbabilisticRun probabilistic_construct(int n, int d, int w, int q,
                                         std::optional<int> lambda = std::nullopt,
                                         std::uint64_t seed = 0);

}  // namespace cwc
