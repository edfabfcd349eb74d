#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwc/error.hpp"

namespace cwc {

// Symbols are 0-based values 0..q-1; the alphabet size lives on the Code.
// q is capped at 256 so a symbol always fits a byte.
using Word = std::vector<std::uint8_t>;

inline constexpr int kMaxAlphabet = 256;

std::size_t weight(const Word& u);
std::vector<int> support(const Word& u);

// Throws PreconditionError on length mismatch.
std::size_t hamming_distance(const Word& u, const Word& v);

// Same value as hamming_distance, computed by merging the sorted supports.
// Cheap when both weights are far below the length.
std::size_t hamming_distance_sparse(const Word& u, const Word& v);

struct CodeParams {
    int n = 0;  // length
    int d = 0;  // claimed minimum distance
    int w = 0;  // claimed constant weight
    int q = 0;  // alphabet size
};

struct Code {
    CodeParams params;
    std::vector<Word> words;
    std::string provenance;
};

struct DistanceViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t distance = 0;
};

struct StructureViolation {
    std::size_t index = 0;
    std::string reason;
};

struct VerificationReport {
    bool valid = false;
    // Empty when the code has fewer than two words.
    std::optional<std::size_t> actual_min_distance;
    std::vector<std::size_t> weight_violations;
    std::vector<DistanceViolation> distance_violations;
    std::vector<StructureViolation> structure_violations;
};

// Checks length/alphabet integrity, constant weight, and the pairwise
// minimum distance. Never throws; all failures land in the report.
VerificationReport verify_code(const Code& c);

// Sorts words lexicographically and removes duplicates.
void canonicalize(Code& c);

}  // namespace cwc
