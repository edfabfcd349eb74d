#include "cwc/lifting.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cwc/brute_force.hpp"
#include "cwc/disjointify.hpp"
#include "cwc/factorizations.hpp"
#include "cwc/gdd.hpp"
#include "cwc/packings.hpp"
#include "cwc/set_systems.hpp"
#include "cwc/steiner.hpp"

namespace cwc {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Recomputed over all pairs; 2w (the largest value two weight-w words can
// reach) when the code has no pair to measure.
int min_distance(const Code& c) {
    std::size_t best = 2 * static_cast<std::size_t>(c.params.w);
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    return static_cast<int>(best);
}

Code verified(Code c, const std::string& who) {
    if (!verify_code(c).valid)
        throw ValidationError(who + ": output failed verification");
    return c;
}

long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }

// Binary codes of the systems become classes with symbols 1, 2, ...
Code lift_systems(const std::vector<SetSystem>& systems, int q) {
    LiftPlan plan;
    plan.q = q;
    for (std::size_t i = 0; i < systems.size(); ++i)
        plan.classes.push_back({packing_code_convert(systems[i]), static_cast<int>(i) + 1});
    return lift(plan);
}

// Optimal ternary weight-3 code on the first k coordinates, padded to
// length n. The search space is tiny, so the exact search always finishes.
std::vector<Word> group_subcode(int k, int n) {
    BruteForceResult bf = brute_force_max(k, 4, 3, 3);
    if (!bf.completed)
        throw BudgetError("group_subcode: exact search did not finish");
    std::vector<Word> out;
    for (const Word& u : bf.witness.words) {
        Word v(static_cast<std::size_t>(n), 0);
        std::copy(u.begin(), u.end(), v.begin());
        out.push_back(std::move(v));
    }
    return out;
}

// Maximum triangle packing of odd order m = 5 (mod 6): the blocks of a
// group-divisible design with one group of size five, plus two triangles
// closing that group. The uncovered pairs form a 4-cycle on {1,2,3,4}.
SetSystem max_packing(int m, std::uint64_t seed, std::uint64_t budget) {
    SetSystem sys = gdd_pair_5_1((m - 5) / 6, seed, budget).first;
    sys.groups.clear();
    sys.blocks.push_back({0, 1, 2});
    sys.blocks.push_back({0, 3, 4});
    canonicalize(sys);
    validate_packing(sys, 2, 1);
    return sys;
}

ConstructResult gs_route(int n, int q) {
    std::vector<Code> classes = graham_sloane_classes(n);
    LiftPlan plan;
    plan.q = q;
    for (int r = 0; r < n; ++r)
        if (!classes[r].words.empty())
            plan.classes.push_back({std::move(classes[r]), r + 1});
    Code c = lift(plan);
    c.params.d = 4;
    c.provenance = "Thm13i:GS(" + std::to_string(n) + ")";
    return {verified(std::move(c), "construct_n43"), binom3(n), true};
}

ConstructResult brute_route(int n, int q) {
    BruteForceResult bf = brute_force_max(n, 4, 3, q);
    Code c = bf.witness;
    c.provenance = "brute:max(" + std::to_string(n) + ",4,3," + std::to_string(q) + ")";
    const auto found = static_cast<long long>(c.words.size());
    return {verified(std::move(c), "construct_n43"), found, bf.completed};
}

// Generator rows for the cyclic length-7 codes; row r first appears in the
// alphabet of size r + 3.
constexpr const char* kCyclicRows[5] = {"0000121", "0033001", "0020302", "0004404",
                                        "0005055"};

Code cyclic_code_7(int q) {
    const int rows = std::min(q, 6) - 1;
    Code c;
    c.params = {7, 4, 3, q};
    for (int r = 0; r < rows; ++r)
        for (int shift = 0; shift < 7; ++shift) {
            Word u(7, 0);
            for (int i = 0; i < 7; ++i)
                u[(i + shift) % 7] = static_cast<std::uint8_t>(kCyclicRows[r][i] - '0');
            c.words.push_back(std::move(u));
        }
    canonicalize(c);
    c.provenance = "Lem13:C" + std::to_string(rows + 1) + "(7)";
    return c;
}

ConstructResult lemma13_route(int q) {
    Code c = cyclic_code_7(q);
    const auto found = static_cast<long long>(c.words.size());
    return {verified(std::move(c), "construct_n43"), found, true};
}

ConstructResult lemma14_route(int q) {
    Code full = cyclic_code_7(q);
    Code c = shorten(full, best_shorten_coordinate(full));
    c.provenance = "Lem14:0short(" + full.provenance + ")";
    return {verified(std::move(c), "construct_n43"), 4LL * (q - 1), true};
}

ConstructResult sts_route(int n, int q, int s, std::uint64_t seed, std::uint64_t budget) {
    DisjointifyOptions opts;
    opts.allow_partial = true;
    DisjointifyResult res = disjointify(steiner_triple_system(n), s, seed, budget, opts);
    Code c = lift_systems(res.systems, q);
    c.params.d = 4;
    c.provenance =
        "Thm10i:" + std::to_string(res.systems.size()) + "xSTS(" + std::to_string(n) + ")";
    const long long target = static_cast<long long>(s) * n * (n - 1) / 6;
    return {verified(std::move(c), "construct_n43"), target, res.complete};
}

ConstructResult sts_deleted_route(int n, int q, int s, std::uint64_t seed,
                                  std::uint64_t budget) {
    DisjointifyOptions opts;
    opts.allow_partial = true;
    DisjointifyResult res = disjointify(steiner_triple_system(n + 1), s, seed, budget, opts);
    std::vector<SetSystem> classes;
    for (const SetSystem& sys : res.systems) {
        SetSystem kept;
        kept.point_count = n;
        for (const auto& block : sys.blocks)
            if (std::find(block.begin(), block.end(), n) == block.end())
                kept.blocks.push_back(block);
        canonicalize(kept);
        classes.push_back(std::move(kept));
    }
    Code c = lift_systems(classes, q);
    c.params.d = 4;
    c.provenance = "Thm10ii:" + std::to_string(classes.size()) + "xSTS(" +
                   std::to_string(n + 1) + ")-pt";
    const long long target = static_cast<long long>(s) * n * (n - 2) / 6;
    return {verified(std::move(c), "construct_n43"), target, res.complete};
}

ConstructResult ternary_5_route(int n, std::uint64_t seed, std::uint64_t budget) {
    auto [a, b] = gdd_pair_5_1((n - 5) / 6, mix_seed(seed, 1), budget);
    a.groups.clear();
    b.groups.clear();
    Code c = lift_systems({a, b}, 3);
    for (Word& u : group_subcode(5, n))
        c.words.push_back(std::move(u));
    canonicalize(c);
    c.params.d = 4;
    c.provenance = "VI-D:2xGDD5(" + std::to_string((n - 5) / 6) + ")+opt(5,4,3)";
    const long long target = (static_cast<long long>(n) * (n - 1) - 2) / 3 - 1;
    if (static_cast<long long>(c.words.size()) != target)
        throw ValidationError("construct_n43: ternary route missed its exact size");
    return {verified(std::move(c), "construct_n43"), target, true};
}

ConstructResult ternary_4_route(int n, std::uint64_t seed, std::uint64_t budget) {
    ConstructResult longer = ternary_5_route(n + 1, seed, budget);
    Code c = shorten(longer.code, 0);
    // The group coordinates of the longer code are now 0..3; whatever words
    // the subcode left inside them give way to a fresh optimal pair.
    std::vector<Word> kept;
    for (Word& u : c.words) {
        bool inside = true;
        for (int i = 4; i < c.params.n && inside; ++i)
            inside = u[static_cast<std::size_t>(i)] == 0;
        if (!inside)
            kept.push_back(std::move(u));
    }
    c.words = std::move(kept);
    for (Word& u : group_subcode(4, n))
        c.words.push_back(std::move(u));
    canonicalize(c);
    c.params.d = 4;
    c.provenance = "VI-D:short(" + longer.code.provenance + ")+opt(4,4,3)";
    const long long target = (static_cast<long long>(n) * n - 2 * n - 2) / 3;
    if (static_cast<long long>(c.words.size()) != target)
        throw ValidationError("construct_n43: ternary route missed its exact size");
    return {verified(std::move(c), "construct_n43"), target, true};
}

ConstructResult packing_lift_5(int n, int q, std::uint64_t seed, std::uint64_t budget) {
    const int s = q - 1;
    SetSystem pack = max_packing(n, mix_seed(seed, 1), budget);
    DisjointifyOptions opts;
    opts.allow_partial = true;
    DisjointifyResult res = disjointify(pack, s, mix_seed(seed, 2), budget, opts);
    Code c = lift_systems(res.systems, q);
    c.params.d = 4;
    c.provenance =
        "Thm10iii:" + std::to_string(res.systems.size()) + "xMP(" + std::to_string(n) + ")";
    const long long target = static_cast<long long>(s) * (static_cast<long long>(n) * (n - 1) - 8) / 6;
    return {verified(std::move(c), "construct_n43"), target, res.complete};
}

ConstructResult packing_lift_4(int n, int q, std::uint64_t seed, std::uint64_t budget) {
    const int s = q - 1;
    const int m = n + 1;
    const int on_leave = (m - 3) / 2;  // blocks through a point of the leave
    SetSystem pack = max_packing(m, mix_seed(seed, 1), budget);
    const long long target = static_cast<long long>(s) * (n - 4) * (n + 2) / 6 + 1;
    const int attempts = 8;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        DisjointifyOptions opts;
        opts.allow_partial = true;
        DisjointifyResult res = disjointify(pack, s, mix_seed(seed, 2 + attempt), budget, opts);
        // A coordinate on exactly one image's leave loses the fewest words
        // the shortened size can still account for exactly.
        std::vector<int> leaves(m, 0);
        for (const SetSystem& sys : res.systems) {
            std::vector<int> through(m, 0);
            for (const auto& block : sys.blocks)
                for (int p : block)
                    ++through[p];
            for (int x = 0; x < m; ++x)
                if (through[x] == on_leave)
                    ++leaves[x];
        }
        int coord = -1;
        for (int x = 0; x < m && coord < 0; ++x)
            if (leaves[x] == 1)
                coord = x;
        if (coord < 0 && res.complete && attempt + 1 < attempts)
            continue;  // reshuffle the images and look again
        if (coord < 0)
            coord = static_cast<int>(std::max_element(leaves.begin(), leaves.end()) -
                                     leaves.begin());
        Code c = lift_systems(res.systems, q);
        c = shorten(c, coord);
        c.params.d = 4;
        c.provenance = "Thm10iv:short(" + std::to_string(res.systems.size()) + "xMP(" +
                       std::to_string(m) + "),c" + std::to_string(coord) + ")";
        const bool complete =
            res.complete && static_cast<long long>(c.words.size()) >= target;
        return {verified(std::move(c), "construct_n43"), target, complete};
    }
    throw ValidationError("construct_n43: unreachable");
}

void check_common_range(const char* who, int n, int n_min, int q) {
    if (n < n_min)
        throw PreconditionError(std::string(who) + ": n is below " + std::to_string(n_min));
    if (q < 2 || q > kMaxAlphabet)
        throw PreconditionError(std::string(who) + ": q outside [2, 256]");
}

}  // namespace

Code lift(const LiftPlan& plan) {
    if (plan.classes.empty())
        throw PreconditionError("lift: plan has no classes");
    if (plan.q < 2 || plan.q > kMaxAlphabet)
        throw PreconditionError("lift: q outside [2, 256]");
    const int n = plan.classes.front().binary.params.n;
    const int w = plan.classes.front().binary.params.w;
    std::set<int> symbols;
    std::set<Word> seen;
    Code out;
    out.params = {n, 0, w, plan.q};
    std::size_t total = 0;
    for (const LiftClass& cls : plan.classes) {
        if (cls.symbol < 1 || cls.symbol >= plan.q)
            throw PreconditionError("lift: class symbol outside [1, q-1]");
        if (!symbols.insert(cls.symbol).second)
            throw PreconditionError("lift: duplicate class symbol");
        if (cls.binary.params.n != n || cls.binary.params.w != w)
            throw PreconditionError("lift: classes disagree on (n, w)");
        total += cls.binary.words.size();
        for (const Word& u : cls.binary.words) {
            if (u.size() != static_cast<std::size_t>(n))
                throw PreconditionError("lift: class word length differs from n");
            Word v(u.size(), 0);
            int ones = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] > 1)
                    throw PreconditionError("lift: class code is not binary");
                if (u[i]) {
                    v[i] = static_cast<std::uint8_t>(cls.symbol);
                    ++ones;
                }
            }
            if (ones != w)
                throw PreconditionError("lift: class word weight differs from w");
            if (!seen.insert(u).second)
                throw PreconditionError("lift: classes share a codeword");
            out.words.push_back(std::move(v));
        }
    }
    canonicalize(out);
    if (out.words.size() != total)
        throw ValidationError("lift: lifted words collide");
    out.params.d = min_distance(out);
    return out;
}

Code construct_n32(int n, int q) {
    check_common_range("construct_n32", n, 2, q);
    const long long target = q <= n ? static_cast<long long>(q - 1) * n / 2
                                    : static_cast<long long>(n) * (n - 1) / 2;
    const Factorization f = n % 2 == 0 ? one_factorization(n) : near_one_factorization(n);
    const int s = std::min(q - 1, static_cast<int>(f.factors.size()));
    LiftPlan plan;
    plan.q = q;
    for (int i = 0; i < s; ++i) {
        Code cls;
        cls.params = {n, 4, 2, 2};  // edges of one factor are disjoint
        for (const Edge& e : f.factors[i]) {
            Word u(static_cast<std::size_t>(n), 0);
            u[e[0]] = 1;
            u[e[1]] = 1;
            cls.words.push_back(std::move(u));
        }
        canonicalize(cls);
        plan.classes.push_back({std::move(cls), i + 1});
    }
    Code c = lift(plan);
    std::size_t mixed = 0;
    if (n % 2 == 1 && q <= n) {
        // Words on the edges of the never-lifted last factor, each edge
        // carrying the two symbols that no lifted word can match there.
        for (int k = 0; 2 * (k + 1) <= q - 1; ++k) {
            Word u(static_cast<std::size_t>(n), 0);
            u[2 * k] = static_cast<std::uint8_t>(2 * k + 1);
            u[2 * k + 1] = static_cast<std::uint8_t>(2 * k + 2);
            c.words.push_back(std::move(u));
            ++mixed;
        }
    }
    canonicalize(c);
    c.params.d = 3;
    c.provenance = "Thm9:" + std::to_string(s) + (n % 2 == 0 ? "xF(" : "xNF(") +
                   std::to_string(n) + ")" +
                   (mixed ? "+mixed(" + std::to_string(mixed) + ")" : "");
    if (static_cast<long long>(c.words.size()) != target)
        throw ValidationError("construct_n32: size differs from the dispatch value");
    return verified(std::move(c), "construct_n32");
}

std::vector<Code> graham_sloane_classes(int n) {
    if (n < 3)
        throw PreconditionError("graham_sloane_classes: n is below 3");
    std::vector<Code> classes(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        classes[r].params = {n, 4, 3, 2};
        classes[r].provenance = "GS(" + std::to_string(n) + "):r" + std::to_string(r);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Word u(static_cast<std::size_t>(n), 0);
                u[i] = 1;
                u[j] = 1;
                u[k] = 1;
                classes[(i + j + k) % n].words.push_back(std::move(u));
            }
    for (Code& c : classes)
        canonicalize(c);
    return classes;
}

ConstructResult construct_n43(int n, int q, std::uint64_t seed, std::uint64_t budget) {
    check_common_range("construct_n43", n, 3, q);
    if (q >= n + 1)
        return gs_route(n, q);
    if (n <= 5)
        return brute_route(n, q);
    if (n == 7 && q >= 4)
        return lemma13_route(q);
    if (n == 6 && q >= 4)
        return lemma14_route(q);
    switch (n % 6) {
        case 1:
        case 3:
            return sts_route(n, q, std::min(q - 1, n - 2), seed, budget);
        case 0:
        case 2:
            return sts_deleted_route(n, q, std::min(q - 1, n - 1), seed, budget);
        case 5:
            return q == 3 ? ternary_5_route(n, seed, budget)
                          : packing_lift_5(n, q, seed, budget);
        default:
            return q == 3 ? ternary_4_route(n, seed, budget)
                          : packing_lift_4(n, q, seed, budget);
    }
}

ConstructResult packing_lift_n43(int n, int q, std::uint64_t seed, std::uint64_t budget) {
    check_common_range("packing_lift_n43", n, 4, q);
    if (n % 6 == 5)
        return packing_lift_5(n, q, seed, budget);
    if (n % 6 == 4)
        return packing_lift_4(n, q, seed, budget);
    throw PreconditionError("packing_lift_n43: n is not 4 or 5 mod 6");
}

Code shorten(const Code& c, int coord) {
    if (coord < 0 || coord >= c.params.n)
        throw PreconditionError("shorten: coordinate outside [0, n)");
    Code out;
    out.params = c.params;
    out.params.n = c.params.n - 1;
    out.provenance = c.provenance;
    for (const Word& u : c.words) {
        if (u.size() != static_cast<std::size_t>(c.params.n))
            throw PreconditionError("shorten: word length differs from n");
        if (u[static_cast<std::size_t>(coord)])
            continue;
        Word v;
        v.reserve(u.size() - 1);
        for (std::size_t i = 0; i < u.size(); ++i)
            if (static_cast<int>(i) != coord)
                v.push_back(u[i]);
        out.words.push_back(std::move(v));
    }
    if (out.words.empty())
        throw PreconditionError("shorten: every codeword covers the coordinate");
    canonicalize(out);
    return out;
}

std::vector<std::size_t> coordinate_cover_counts(const Code& c) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(c.params.n), 0);
    for (const Word& u : c.words)
        for (std::size_t i = 0; i < u.size() && i < counts.size(); ++i)
            if (u[i])
                ++counts[i];
    return counts;
}

int best_shorten_coordinate(const Code& c) {
    const auto counts = coordinate_cover_counts(c);
    if (counts.empty())
        throw PreconditionError("best_shorten_coordinate: code has length zero");
    return static_cast<int>(std::min_element(counts.begin(), counts.end()) - counts.begin());
}

ConstructResult construct_13_6_4(int q, std::uint64_t seed, std::uint64_t budget) {
    check_common_range("construct_13_6_4", 13, 13, q);
    const SetSystem base = design_13_4();
    const int s = std::min(q - 1, 55);
    const long long target = 13LL * s;
    if (q == 2) {
        Code c = packing_code_convert(base);
        c.params.d = 6;
        c.provenance = "Thm15:1x2-(13,4,1)";
        return {verified(std::move(c), "construct_13_6_4"), target, true};
    }
    DisjointifyOptions opts;
    opts.allow_partial = true;
    // Images may share at most two points per block pair, else two words
    // from different classes land at distance 5.
    opts.max_cross_overlap = 2;
    DisjointifyResult res = disjointify(base, s, seed, budget, opts);
    Code c = lift_systems(res.systems, q);
    c.params.d = 6;
    c.provenance = "Thm15:" + std::to_string(res.systems.size()) + "x2-(13,4,1)";
    return {verified(std::move(c), "construct_13_6_4"), target, res.complete};
}

Code construct_w_plus_1(int n, int w, int q, int t, std::uint64_t seed,
                        std::uint64_t budget) {
    if (w < 1 || n < w)
        throw PreconditionError("construct_w_plus_1: need 1 <= w <= n");
    if (q < 2 || q > kMaxAlphabet)
        throw PreconditionError("construct_w_plus_1: q outside [2, 256]");
    if (t < 1 || 2 * t > w + 1)
        throw PreconditionError("construct_w_plus_1: t outside [1, (w+1)/2]");
    if (q - 1 > w / t)
        throw PreconditionError("construct_w_plus_1: q-1 exceeds w/t");
    const SetSystem pack = greedy_packing(n, w, t, 1);
    DisjointifyResult res = disjointify(pack, q - 1, seed, budget);
    Code c = lift_systems(res.systems, q);
    if (c.params.d < w + 1)
        throw ValidationError("construct_w_plus_1: lifted distance fell below w+1");
    c.params.d = w + 1;
    c.provenance = "Lem17:" + std::to_string(q - 1) + "xpack(" + std::to_string(t) + "-(" +
                   std::to_string(n) + "," + std::to_string(w) + ",1))";
    return verified(std::move(c), "construct_w_plus_1");
}

Code partition_lift_asymptotic(int n, int q) {
    check_common_range("partition_lift_asymptotic", n, 3, q);
    if (q - 1 > n)
        throw PreconditionError("partition_lift_asymptotic: q-1 exceeds n");
    std::vector<Code> classes = graham_sloane_classes(n);
    const int per = q - 1;
    const int tau = n / per;
    int best_part = 0;
    long long best_size = -1;
    for (int p = 0; p < tau; ++p) {
        long long size = 0;
        for (int i = 0; i < per; ++i)
            size += static_cast<long long>(classes[p * per + i].words.size());
        if (size > best_size) {
            best_size = size;
            best_part = p;
        }
    }
    LiftPlan plan;
    plan.q = q;
    for (int i = 0; i < per; ++i) {
        Code& cls = classes[best_part * per + i];
        if (!cls.words.empty())
            plan.classes.push_back({std::move(cls), i + 1});
    }
    Code c = lift(plan);
    c.params.d = 4;
    c.provenance = "VI-G:part" + std::to_string(best_part) + "of" + std::to_string(tau) +
                   "(GS(" + std::to_string(n) + "))";
    // The kept parts hold all but at most q-2 classes, so the biggest one
    // cannot fall under the pigeonhole share n(n-1)(n-q)/(6 tau).
    if (static_cast<long long>(c.words.size()) * 6 * tau <
        static_cast<long long>(n) * (n - 1) * (n - q))
        throw ValidationError("partition_lift_asymptotic: size fell below the pigeonhole bound");
    return verified(std::move(c), "partition_lift_asymptotic");
}

}  // namespace cwc
