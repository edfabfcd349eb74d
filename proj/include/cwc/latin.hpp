#pragma once

#include <utility>
#include <vector>

#include "cwc/error.hpp"

namespace cwc {

struct LatinSquare {
    int side = 0;
    std::vector<std::vector<int>> cells;
    // When positive, the top-left k x k corner is a Latin square on symbols
    // 0..k-1 and is treated as the marked subsquare.
    int subsquare_side = 0;
};

// Checks rows, columns, and the marked subsquare; throws ValidationError.
void validate_latin(const LatinSquare& L);

// Latin square of side n whose top-left k x k corner is a cyclic subsquare
// on symbols 0..k-1 (k <= n/2). The first k rows are explicit; the rest are
// completed row by row with bipartite matching. Deterministic.
LatinSquare latin_square_subsquare(int n, int k);

// Image of L under a symbol permutation sigma. With keep_subsquare, the
// marked corner keeps its original entries (sigma must fix 0..k-1 setwise
// for the result to stay Latin).
LatinSquare permute_symbols(const LatinSquare& L, const std::vector<int>& sigma,
                            bool keep_subsquare);

// Two Latin squares of side n (n >= 6) agreeing exactly on a common cyclic
// 3 x 3 top-left subsquare and differing in every one of the other n^2 - 9
// cells.
std::pair<LatinSquare, LatinSquare> disjoint_latin_pair(int n);

}  // namespace cwc
