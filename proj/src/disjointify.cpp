#include "cwc/disjointify.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace cwc {

namespace {

struct Climber {
    const SetSystem& seed;
    const std::unordered_set<std::uint64_t>& prev_keys;
    const std::vector<std::vector<int>>& prev_blocks;
    const int max_cross_overlap;

    std::vector<int> perm;
    std::vector<std::vector<int>> images;     // permuted, sorted blocks
    std::vector<int> contribs;                // per-block objective share
    long long total = 0;
    std::vector<std::vector<int>> incidence;  // seed-block indices per point

    Climber(const SetSystem& s, const std::unordered_set<std::uint64_t>& keys,
            const std::vector<std::vector<int>>& blocks, int cap)
        : seed(s), prev_keys(keys), prev_blocks(blocks), max_cross_overlap(cap) {
        perm.resize(seed.point_count);
        for (int p = 0; p < seed.point_count; ++p)
            perm[p] = p;
        incidence.resize(seed.point_count);
        for (std::size_t b = 0; b < seed.blocks.size(); ++b)
            for (int p : seed.blocks[b])
                incidence[p].push_back(static_cast<int>(b));
        images.resize(seed.blocks.size());
        contribs.assign(seed.blocks.size(), 0);
        recompute();
    }

    std::vector<int> image_of(std::size_t b) const {
        std::vector<int> img;
        img.reserve(seed.blocks[b].size());
        for (int p : seed.blocks[b])
            img.push_back(perm[p]);
        std::sort(img.begin(), img.end());
        return img;
    }

    int contribution(const std::vector<int>& img) const {
        int c = prev_keys.count(block_key(img)) ? 1 : 0;
        if (max_cross_overlap >= 0)
            for (const auto& pb : prev_blocks) {
                int overlap = 0;
                auto it = pb.begin();
                for (int p : img) {
                    while (it != pb.end() && *it < p)
                        ++it;
                    if (it != pb.end() && *it == p)
                        ++overlap;
                }
                if (overlap > max_cross_overlap)
                    ++c;
            }
        return c;
    }

    void recompute() {
        total = 0;
        for (std::size_t b = 0; b < seed.blocks.size(); ++b) {
            images[b] = image_of(b);
            contribs[b] = contribution(images[b]);
            total += contribs[b];
        }
    }

    // Tries swapping perm[i] and perm[j]; keeps the swap unless it makes the
    // objective worse. Returns true when the swap was kept.
    bool try_swap(int i, int j) {
        std::vector<int> affected;
        affected.reserve(incidence[i].size() + incidence[j].size());
        affected.insert(affected.end(), incidence[i].begin(), incidence[i].end());
        affected.insert(affected.end(), incidence[j].begin(), incidence[j].end());
        std::sort(affected.begin(), affected.end());
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

        std::swap(perm[i], perm[j]);
        long long delta = 0;
        std::vector<std::vector<int>> fresh(affected.size());
        std::vector<int> fresh_contrib(affected.size());
        for (std::size_t a = 0; a < affected.size(); ++a) {
            fresh[a] = image_of(affected[a]);
            fresh_contrib[a] = contribution(fresh[a]);
            delta += fresh_contrib[a] - contribs[affected[a]];
        }
        if (delta > 0) {
            std::swap(perm[i], perm[j]);
            return false;
        }
        for (std::size_t a = 0; a < affected.size(); ++a) {
            images[affected[a]] = std::move(fresh[a]);
            contribs[affected[a]] = fresh_contrib[a];
        }
        total += delta;
        return true;
    }
};

// C(n, k) capped to avoid overflow; anything above the cap behaves as
// "huge", which is all the sufficiency test needs.
unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto num = static_cast<unsigned long long>(n - k + i);
        if (r > cap / num)
            return cap;
        r = r * num / i;
    }
    return std::min(r, cap);
}

}  // namespace

DisjointifyResult disjointify(const SetSystem& seed_system, int s, std::uint64_t seed,
                              std::uint64_t budget, const DisjointifyOptions& opts) {
    if (s < 1)
        throw PreconditionError("disjointify: requires s >= 1");
    SetSystem base = seed_system;
    canonicalize(base);
    const int n = base.point_count;

    DisjointifyResult result;
    result.systems.push_back(base);
    if (!base.blocks.empty()) {
        const auto k = static_cast<int>(base.blocks.front().size());
        if (uniform(base, k)) {
            const unsigned long long cap = ~0ULL;
            unsigned long long power = 1;
            const unsigned long long total_blocks = binomial_capped(n, k, cap);
            bool overflow = false;
            for (int i = 0; i < s && !overflow; ++i) {
                if (power > cap / std::max<unsigned long long>(base.blocks.size(), 1))
                    overflow = true;
                else
                    power *= base.blocks.size();
            }
            result.cor2_sufficient = !overflow && power < total_blocks;
        }
    }

    // Membership near the fixed set decides which transpositions are legal.
    std::vector<char> in_fixed(n, 0);
    for (int p : opts.fixed_setwise) {
        if (p < 0 || p >= n)
            throw PreconditionError("disjointify: fixed point outside [0, n)");
        in_fixed[p] = 1;
    }
    std::vector<int> fixed_points, free_points;
    for (int p = 0; p < n; ++p)
        (in_fixed[p] ? fixed_points : free_points).push_back(p);

    std::mt19937_64 rng(seed);
    auto random_point_pair = [&](int& i, int& j) {
        // Both endpoints on the same side of the fixed-set boundary.
        const bool use_fixed =
            fixed_points.size() >= 2 &&
            (free_points.size() < 2 ||
             rng() % (fixed_points.size() + free_points.size()) < fixed_points.size());
        const auto& pool = use_fixed ? fixed_points : free_points;
        if (pool.size() < 2)
            return false;
        i = pool[rng() % pool.size()];
        do {
            j = pool[rng() % pool.size()];
        } while (j == i);
        return true;
    };

    std::unordered_set<std::uint64_t> prev_keys;
    std::vector<std::vector<int>> prev_blocks;
    auto absorb = [&](const SetSystem& sys) {
        for (const auto& b : sys.blocks) {
            prev_keys.insert(block_key(b));
            prev_blocks.push_back(b);
        }
    };
    absorb(base);

    std::uint64_t moves = 0;
    for (int copy = 1; copy < s; ++copy) {
        Climber climber(base, prev_keys, prev_blocks,
                        base.blocks.empty() ? -1 : opts.max_cross_overlap);
        int stall = 0;
        while (climber.total != 0) {
            if (moves >= budget) {
                result.moves_used = moves;
                if (opts.allow_partial)
                    return result;
                throw BudgetError("disjointify: budget exhausted after " +
                                  std::to_string(moves) +
                                  " moves (not a proof of nonexistence)");
            }
            ++moves;
            if (stall > opts.stall_limit) {
                // Rerandomize each side of the boundary independently.
                for (auto* pool : {&fixed_points, &free_points})
                    for (std::size_t a = pool->size(); a > 1; --a)
                        std::swap(climber.perm[(*pool)[a - 1]],
                                  climber.perm[(*pool)[rng() % a]]);
                climber.recompute();
                stall = 0;
                continue;
            }
            int i = 0, j = 0;
            if (!random_point_pair(i, j))
                break;  // no legal move can ever change anything
            const long long before = climber.total;
            if (climber.try_swap(i, j) && climber.total < before)
                stall = 0;
            else
                ++stall;
        }
        if (climber.total != 0) {
            result.moves_used = moves;
            if (opts.allow_partial)
                return result;
            throw BudgetError("disjointify: no legal moves left with a nonzero collision count");
        }
        SetSystem sys;
        sys.point_count = n;
        sys.blocks = climber.images;
        for (const auto& g : base.groups) {
            std::vector<int> img;
            for (int p : g)
                img.push_back(climber.perm[p]);
            sys.groups.push_back(std::move(img));
        }
        canonicalize(sys);
        absorb(sys);
        result.systems.push_back(std::move(sys));
    }
    result.complete = true;
    result.moves_used = moves;
    return result;
}

}  // namespace cwc
