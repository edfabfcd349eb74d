#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cwc/error.hpp"

namespace cwc {

using Edge = std::array<int, 2>;  // sorted pair of vertices

struct Factorization {
    int vertex_count = 0;
    std::vector<std::vector<Edge>> factors;
};

// Round-robin one-factorization of K_n for even n: n-1 perfect matchings
// that partition the edge set. Deterministic.
Factorization one_factorization(int n);

// Near-one-factorization of K_n for odd n: n factors, factor i isolates
// vertex i and matches the rest. Relabeled so the last factor is
// {{0,1},{2,3},...,{n-3,n-2}}. Deterministic.
Factorization near_one_factorization(int n);

// Exhaustive validity check; throws ValidationError with the failing detail.
void validate_factorization(const Factorization& f);

}  // namespace cwc
