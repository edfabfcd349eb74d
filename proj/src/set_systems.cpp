#include "cwc/set_systems.hpp"

#include <algorithm>
#include <unordered_set>

namespace cwc {

void canonicalize(SetSystem& s) {
    for (auto& block : s.blocks) {
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw ValidationError("set system: repeated point inside a block");
        if (!block.empty() && (block.front() < 0 || block.back() >= s.point_count))
            throw ValidationError("set system: point outside [0, n)");
    }
    std::sort(s.blocks.begin(), s.blocks.end());
    if (std::adjacent_find(s.blocks.begin(), s.blocks.end()) != s.blocks.end())
        throw ValidationError("set system: repeated block");
    for (auto& group : s.groups)
        std::sort(group.begin(), group.end());
    std::sort(s.groups.begin(), s.groups.end());
}

bool uniform(const SetSystem& s, int k) {
    for (const auto& block : s.blocks)
        if (static_cast<int>(block.size()) != k)
            return false;
    return true;
}

std::size_t intersection_size(const SetSystem& a, const SetSystem& b) {
    if (a.point_count != b.point_count)
        throw PreconditionError("intersection_size: systems have different orders");
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(a.blocks.size() * 2);
    for (const auto& block : a.blocks)
        keys.insert(block_key(block));
    std::size_t common = 0;
    for (const auto& block : b.blocks)
        common += keys.count(block_key(block));
    return common;
}

Code packing_code_convert(const SetSystem& s) {
    if (s.blocks.empty())
        throw PreconditionError("packing_code_convert: system has no blocks");
    const auto k = static_cast<int>(s.blocks.front().size());
    if (!uniform(s, k))
        throw PreconditionError("packing_code_convert: system is not uniform");

    Code c;
    c.params.n = s.point_count;
    c.params.w = k;
    c.params.q = 2;
    c.words.reserve(s.blocks.size());
    for (const auto& block : s.blocks) {
        Word u(s.point_count, 0);
        for (int p : block) {
            if (p < 0 || p >= s.point_count)
                throw PreconditionError("packing_code_convert: point outside [0, n)");
            u[p] = 1;
        }
        c.words.push_back(std::move(u));
    }
    canonicalize(c);
    if (c.words.size() != s.blocks.size())
        throw PreconditionError("packing_code_convert: repeated block");

    // True minimum distance: block overlap o gives distance 2(k - o).
    std::size_t max_overlap = 0;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        std::vector<char> in_block(s.point_count, 0);
        for (int p : s.blocks[i])
            in_block[p] = 1;
        for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
            std::size_t overlap = 0;
            for (int p : s.blocks[j])
                overlap += in_block[p];
            max_overlap = std::max(max_overlap, overlap);
        }
    }
    c.params.d = s.blocks.size() > 1 ? 2 * (k - static_cast<int>(max_overlap)) : 2 * k;
    return c;
}

SetSystem packing_code_convert(const Code& c) {
    if (c.params.q != 2)
        throw PreconditionError("packing_code_convert: code is not binary");
    SetSystem s;
    s.point_count = c.params.n;
    s.blocks.reserve(c.words.size());
    for (const auto& u : c.words)
        s.blocks.push_back(support(u));
    canonicalize(s);
    return s;
}

std::uint64_t block_key(const std::vector<int>& block) {
    if (block.size() > 8)
        throw PreconditionError("block_key: block larger than 8 points");
    std::uint64_t key = 0;
    for (int p : block) {
        if (p < 0 || p > 254)
            throw PreconditionError("block_key: point outside [0, 255)");
        key = (key << 8) | static_cast<std::uint64_t>(p + 1);
    }
    return key;
}

}  // namespace cwc
