#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cwc/words.hpp"

namespace cwc {

// One ingredient of a lift: a binary constant-weight code whose ones are
// replaced by the given nonzero symbol.
struct LiftClass {
    Code binary;
    int symbol = 1;  // in [1, q-1]
};

// Classes must share (n, w), use pairwise distinct symbols, and be pairwise
// disjoint as word sets.
struct LiftPlan {
    std::vector<LiftClass> classes;
    int q = 0;
};

// Union of the symbol-substituted classes. Checks the plan invariants, then
// recomputes the minimum distance of the result and records it as params.d
// (2w for codes with fewer than two words). Size is the sum of class sizes.
Code lift(const LiftPlan& plan);

// A construction's output together with the size its dispatch rule aims
// for. complete is false when a search budget stopped short of the target;
// the code itself is always valid at its declared parameters.
struct ConstructResult {
    Code code;
    long long target_size = 0;
    bool complete = true;
};

// Optimal (n,3,2)_q code of size floor((q-1)n/2) for q <= n and C(n,2) for
// q > n: lifted one-factors for even n, lifted near-one-factors plus a
// two-symbol word class for odd n. Distance 3 is verified on every call.
Code construct_n32(int n, int q);

// Partition of all weight-3 binary words of length n into n classes by the
// residue of the support sum mod n. Every class has minimum distance 4;
// class sizes sum to C(n,3).
std::vector<Code> graham_sloane_classes(int n);

// Best (n,4,3)_q code the dispatch ledger provides: the full weight-3 class
// union for q >= n+1, explicit cyclic codes for n in {6,7} with mid-range q,
// exact ternary routes for n = 4,5 (mod 6), and disjoint triple-system or
// maximum-packing lifts elsewhere. Budget exhaustion is reported through
// complete = false with the achieved partial size, never by weakening the
// verified distance.
ConstructResult construct_n43(int n, int q, std::uint64_t seed = 0,
                              std::uint64_t budget = 1'000'000);

// The maximum-packing lift behind construct_n43 for n = 4,5 (mod 6): q-1
// pairwise block-disjoint maximum packings, lifted, and for n = 4 (mod 6)
// shortened at a coordinate lying on exactly one packing's leave. Exposed
// separately so the deficit against U(n,q) can be audited directly.
ConstructResult packing_lift_n43(int n, int q, std::uint64_t seed = 0,
                                 std::uint64_t budget = 1'000'000);

// Deletes every word whose support contains coord, then drops the
// coordinate. Throws when no word survives.
Code shorten(const Code& c, int coord);

// Number of supports through each coordinate, and the coordinate minimizing
// that count (ties to the smallest index). Exposed so shortening callers
// can see the removal cost per coordinate before committing.
std::vector<std::size_t> coordinate_cover_counts(const Code& c);
int best_shorten_coordinate(const Code& c);

// (13,6,4)_q code lifting min(q-1, 55) images of the cyclic 2-(13,4,1)
// design, pairwise sharing at most two points across images so the distance
// stays 6. At most four such images exist (a fifth always collides with
// some block triple), so targets beyond four return an honest partial
// result no matter the budget.
ConstructResult construct_13_6_4(int q, std::uint64_t seed = 0,
                                 std::uint64_t budget = 1'000'000);

// Lift of q-1 disjoint images of a greedy t-(n,w,1) packing; requires
// 2t <= w+1 and q-1 <= w/t, and verifies minimum distance >= w+1. Throws
// BudgetError when the disjoint images cannot be found in budget.
Code construct_w_plus_1(int n, int w, int q, int t, std::uint64_t seed = 0,
                        std::uint64_t budget = 1'000'000);

// Splits the n weight-3 classes in index order into floor(n/(q-1)) parts of
// q-1 classes, discards the remainder, and lifts the part with the most
// words. Size is at least n(n-1)(n-q)/(6 floor(n/(q-1))); distance 4.
Code partition_lift_asymptotic(int n, int q);

}  // namespace cwc
