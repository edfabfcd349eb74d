#include "cwc/packings.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

namespace cwc {

namespace {

// All w-subsets of [n] in lexicographic order.
std::vector<std::vector<int>> all_blocks(int n, int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(w);
    for (int i = 0; i < w; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = w - 1;
        while (i >= 0 && cur[i] == n - w + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < w; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Visits every t-subset of the (sorted) block.
template <typename Fn>
void for_each_subset(const std::vector<int>& block, int t, Fn&& fn) {
    const int w = static_cast<int>(block.size());
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i)
        idx[i] = i;
    std::vector<int> sub(t);
    while (true) {
        for (int i = 0; i < t; ++i)
            sub[i] = block[idx[i]];
        fn(sub);
        int i = t - 1;
        while (i >= 0 && idx[i] == w - t + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SetSystem greedy_packing(int n, int w, int t, int lambda, std::optional<std::uint64_t> seed,
                         int max_block_overlap) {
    if (!(1 <= t && t <= w && w <= n) || lambda < 1)
        throw PreconditionError("greedy_packing: requires 1 <= t <= w <= n and lambda >= 1");
    // The candidate list is materialized in full; keep it to desk scale.
    double count = 1;
    for (int i = 0; i < w; ++i)
        count *= static_cast<double>(n - i) / (i + 1);
    if (count > 5e6)
        throw PreconditionError("greedy_packing: C(n,w) too large to enumerate");

    auto candidates = all_blocks(n, w);
    if (seed) {
        std::mt19937_64 rng(*seed);
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng() % i]);
    }

    SetSystem s;
    s.point_count = n;
    std::unordered_map<std::uint64_t, int> cover;
    std::vector<char> in_block(n, 0);
    for (const auto& block : candidates) {
        bool fits = true;
        for_each_subset(block, t, [&](const std::vector<int>& sub) {
            if (fits) {
                auto it = cover.find(block_key(sub));
                if (it != cover.end() && it->second >= lambda)
                    fits = false;
            }
        });
        if (fits && max_block_overlap >= 0) {
            std::fill(in_block.begin(), in_block.end(), 0);
            for (int p : block)
                in_block[p] = 1;
            for (const auto& chosen : s.blocks) {
                int overlap = 0;
                for (int p : chosen)
                    overlap += in_block[p];
                if (overlap > max_block_overlap) {
                    fits = false;
                    break;
                }
            }
        }
        if (!fits)
            continue;
        for_each_subset(block, t, [&](const std::vector<int>& sub) {
            ++cover[block_key(sub)];
        });
        s.blocks.push_back(block);
    }
    canonicalize(s);
    validate_packing(s, t, lambda);
    return s;
}

void validate_packing(const SetSystem& s, int t, int lambda) {
    std::unordered_map<std::uint64_t, int> cover;
    for (const auto& block : s.blocks) {
        if (static_cast<int>(block.size()) < t)
            throw ValidationError("packing: block smaller than t");
        for_each_subset(block, t, [&](const std::vector<int>& sub) {
            if (++cover[block_key(sub)] > lambda)
                throw ValidationError("packing: a t-subset is covered more than lambda times");
        });
    }
}

SetSystem design_13_4() {
    SetSystem s;
    s.point_count = 13;
    for (int shift = 0; shift < 13; ++shift) {
        std::vector<int> block;
        for (int base : {0, 1, 3, 9})
            block.push_back((base + shift) % 13);
        s.blocks.push_back(std::move(block));
    }
    canonicalize(s);

    // 2-(13,4,1): every pair in exactly one block.
    std::vector<int> pair_cover(13 * 13, 0);
    for (const auto& block : s.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (++pair_cover[block[i] * 13 + block[j]] > 1)
                    throw Error("design_13_4: pair covered twice");
    for (int a = 0; a < 13; ++a)
        for (int b = a + 1; b < 13; ++b)
            if (pair_cover[a * 13 + b] != 1)
                throw Error("design_13_4: pair not covered");
    return s;
}

}  // namespace cwc
