#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cwc/latin.hpp"
#include "cwc/set_systems.hpp"

namespace cwc {

// Group-divisible design with holes: pairs inside a group or with both
// points in holes stay uncovered, every other cross-group pair is covered
// exactly once. holes[i] is a subset of system.groups[i].
struct IncompleteGdd {
    SetSystem system;
    std::vector<std::vector<int>> holes;
};

// Exhaustive checks; each throws ValidationError with the failing detail.
// validate_gdd expects triple blocks, groups partitioning the points, and
// every cross-group pair covered exactly once.
void validate_gdd(const SetSystem& g);
// Additionally checks the multiset of group sizes.
void validate_gdd_type(const SetSystem& g, std::vector<int> type);
void validate_igdd(const IncompleteGdd& g);

// Triple system of a Latin square of side g: points are rows, columns and
// symbols (three groups of size g), one block {i, g+j, 2g+L[i][j]} per cell.
SetSystem gdd_from_latin(const LatinSquare& L);

// Two incomplete designs of type (n,3)^3 on identical groups and holes with
// disjoint block sets, n^2 - 9 blocks each, from a disjoint Latin pair.
std::pair<IncompleteGdd, IncompleteGdd> disjoint_igdd_pair(int n);

// Two designs of type g^3 on common groups sharing exactly one block,
// relabeled so the common block is {0, g, 2g}. Found by perturbing the
// cyclic square's row and column permutations; throws BudgetError when the
// search budget runs out. g must be odd and at least 7 (no such pair exists
// for g = 3).
std::pair<SetSystem, SetSystem> gdd_pair_intersection_one(int g, std::uint64_t seed,
                                                          std::uint64_t budget);

// Two disjoint designs of type 3^1 1^r sharing the size-3 group {0,1,2}:
// a triple system through {0,1,2} minus that block, and a block-disjoint
// permuted mate. Admissible when 3 + r = 1 or 3 (mod 6) and r is 4, 6, or
// at least 10.
std::pair<SetSystem, SetSystem> gdd_pair_3_1(int r, std::uint64_t seed,
                                             std::uint64_t budget);

// Two disjoint designs of type 5^1 1^(6t) on {0,...,6t+4} sharing the group
// {0,1,2,3,4}. t = 0 is empty, t = 1 and 2 are fixed base cases, larger t
// recurses on ingredient pairs; each ingredient search receives the full
// budget.
std::pair<SetSystem, SetSystem> gdd_pair_5_1(int t, std::uint64_t seed,
                                             std::uint64_t budget);

}  // namespace cwc
