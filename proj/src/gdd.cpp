#include "cwc/gdd.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "cwc/disjointify.hpp"
#include "cwc/steiner.hpp"

namespace cwc {

namespace {

// Base cases on {0,...,10} and {0,...,16}, group {0,1,2,3,4}: one disjoint
// pair per point count, 15 and 42 blocks per side.
constexpr int kPair6tBase1[2][15][3] = {
    {{0, 5, 10}, {0, 6, 9}, {0, 7, 8}, {1, 5, 9}, {1, 6, 7}, {1, 8, 10}, {2, 5, 7}, {2, 6, 8},
     {2, 9, 10}, {3, 5, 6}, {3, 7, 10}, {3, 8, 9}, {4, 5, 8}, {4, 6, 10}, {4, 7, 9}},
    {{0, 5, 9}, {0, 6, 8}, {0, 7, 10}, {1, 5, 6}, {1, 7, 8}, {1, 9, 10}, {2, 5, 8}, {2, 6, 10},
     {2, 7, 9}, {3, 5, 7}, {3, 6, 9}, {3, 8, 10}, {4, 5, 10}, {4, 6, 7}, {4, 8, 9}}};

constexpr int kPair6tBase2[2][42][3] = {
    {{0, 5, 11},  {0, 6, 10},  {0, 7, 13},  {0, 8, 16},  {0, 9, 14},  {0, 12, 15}, {1, 10, 12},
     {1, 11, 16}, {1, 13, 15}, {1, 5, 8},   {1, 6, 14},  {1, 7, 9},   {2, 5, 15},  {2, 6, 13},
     {2, 7, 11},  {2, 8, 10},  {2, 9, 12},  {2, 14, 16}, {3, 5, 12},  {3, 6, 7},   {3, 8, 14},
     {3, 9, 16},  {3, 10, 13}, {3, 11, 15}, {4, 5, 13},  {4, 6, 16},  {4, 7, 10},  {4, 8, 11},
     {4, 9, 15},  {4, 12, 14}, {5, 6, 9},   {5, 7, 16},  {5, 10, 14}, {6, 8, 15},  {6, 11, 12},
     {7, 8, 12},  {7, 14, 15}, {8, 9, 13},  {9, 10, 11}, {10, 15, 16}, {11, 13, 14}, {12, 13, 16}},
    {{0, 5, 13},  {0, 6, 15},  {0, 7, 16},  {0, 8, 10},  {0, 9, 11},  {0, 12, 14}, {1, 5, 9},
     {1, 6, 12},  {1, 7, 15},  {1, 8, 11},  {1, 10, 14}, {1, 13, 16}, {2, 5, 14},  {2, 6, 16},
     {2, 7, 12},  {2, 8, 9},   {2, 10, 11}, {2, 13, 15}, {3, 5, 11},  {3, 6, 14},  {3, 7, 9},
     {3, 8, 15},  {3, 10, 16}, {3, 12, 13}, {4, 5, 7},   {4, 6, 9},   {4, 8, 13},  {4, 10, 12},
     {4, 11, 16}, {4, 14, 15}, {5, 6, 10},  {5, 8, 12},  {5, 15, 16}, {6, 7, 8},   {6, 11, 13},
     {7, 10, 13}, {7, 11, 14}, {8, 14, 16}, {9, 10, 15}, {9, 12, 16}, {9, 13, 14}, {11, 12, 15}}};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Image of a system under the point map pi (old label -> new label); the
// image may live on a larger point set when pi embeds into one.
SetSystem relabeled(const SetSystem& s, const std::vector<int>& pi, int new_point_count = -1) {
    SetSystem out;
    out.point_count = new_point_count < 0 ? s.point_count : new_point_count;
    out.blocks.reserve(s.blocks.size());
    for (const auto& b : s.blocks) {
        std::vector<int> img;
        img.reserve(b.size());
        for (int p : b)
            img.push_back(pi[p]);
        out.blocks.push_back(std::move(img));
    }
    for (const auto& g : s.groups) {
        std::vector<int> img;
        for (int p : g)
            img.push_back(pi[p]);
        out.groups.push_back(std::move(img));
    }
    canonicalize(out);
    return out;
}

// Groups for type 5^1 1^(n-5): {0..4} plus singletons.
void attach_group5(SetSystem& s) {
    s.groups.clear();
    s.groups.push_back({0, 1, 2, 3, 4});
    for (int p = 5; p < s.point_count; ++p)
        s.groups.push_back({p});
}

long long pair_count(int n) {
    return static_cast<long long>(n) * (n - 1) / 2;
}

}  // namespace

void validate_gdd(const SetSystem& g) {
    const int n = g.point_count;
    std::vector<int> group_of(n, -1);
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi)
        for (int p : g.groups[gi]) {
            if (p < 0 || p >= n || group_of[p] != -1)
                throw ValidationError("gdd: groups do not partition the points");
            group_of[p] = static_cast<int>(gi);
        }
    for (int p = 0; p < n; ++p)
        if (group_of[p] == -1)
            throw ValidationError("gdd: point missing from every group");

    std::vector<int> pair_cover(static_cast<std::size_t>(n) * n, 0);
    for (const auto& b : g.blocks) {
        if (b.size() != 3)
            throw ValidationError("gdd: non-triple block");
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (group_of[b[i]] == group_of[b[j]])
                    throw ValidationError("gdd: block meets a group twice");
                ++pair_cover[static_cast<std::size_t>(b[i]) * n + b[j]];
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int count = pair_cover[static_cast<std::size_t>(a) * n + b];
            const int want = group_of[a] == group_of[b] ? 0 : 1;
            if (count != want)
                throw ValidationError("gdd: pair {" + std::to_string(a) + "," +
                                      std::to_string(b) + "} covered " + std::to_string(count) +
                                      " times, expected " + std::to_string(want));
        }
}

void validate_gdd_type(const SetSystem& g, std::vector<int> type) {
    validate_gdd(g);
    std::vector<int> sizes;
    sizes.reserve(g.groups.size());
    for (const auto& grp : g.groups)
        sizes.push_back(static_cast<int>(grp.size()));
    std::sort(sizes.begin(), sizes.end());
    std::sort(type.begin(), type.end());
    if (sizes != type)
        throw ValidationError("gdd: group sizes do not match the declared type");
}

void validate_igdd(const IncompleteGdd& g) {
    const SetSystem& s = g.system;
    const int n = s.point_count;
    if (g.holes.size() != s.groups.size())
        throw ValidationError("igdd: one hole per group required");
    std::vector<int> group_of(n, -1), hole_of(n, -1);
    for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
        for (int p : s.groups[gi]) {
            if (p < 0 || p >= n || group_of[p] != -1)
                throw ValidationError("igdd: groups do not partition the points");
            group_of[p] = static_cast<int>(gi);
        }
        for (int p : g.holes[gi]) {
            if (p < 0 || p >= n || group_of[p] != static_cast<int>(gi))
                throw ValidationError("igdd: hole not inside its group");
            hole_of[p] = static_cast<int>(gi);
        }
    }
    for (int p = 0; p < n; ++p)
        if (group_of[p] == -1)
            throw ValidationError("igdd: point missing from every group");

    std::vector<int> pair_cover(static_cast<std::size_t>(n) * n, 0);
    for (const auto& b : s.blocks) {
        if (b.size() != 3)
            throw ValidationError("igdd: non-triple block");
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (group_of[b[i]] == group_of[b[j]])
                    throw ValidationError("igdd: block meets a group twice");
                ++pair_cover[static_cast<std::size_t>(b[i]) * n + b[j]];
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int count = pair_cover[static_cast<std::size_t>(a) * n + b];
            const bool uncovered =
                group_of[a] == group_of[b] || (hole_of[a] != -1 && hole_of[b] != -1);
            if (count != (uncovered ? 0 : 1))
                throw ValidationError("igdd: pair {" + std::to_string(a) + "," +
                                      std::to_string(b) + "} covered " + std::to_string(count) +
                                      " times");
        }
}

SetSystem gdd_from_latin(const LatinSquare& L) {
    validate_latin(L);
    const int g = L.side;
    SetSystem s;
    s.point_count = 3 * g;
    s.blocks.reserve(static_cast<std::size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            s.blocks.push_back({i, g + j, 2 * g + L.cells[i][j]});
    for (int part = 0; part < 3; ++part) {
        std::vector<int> group(g);
        for (int p = 0; p < g; ++p)
            group[p] = part * g + p;
        s.groups.push_back(std::move(group));
    }
    canonicalize(s);
    validate_gdd(s);
    return s;
}

std::pair<IncompleteGdd, IncompleteGdd> disjoint_igdd_pair(int n) {
    if (n < 6)
        throw PreconditionError("disjoint_igdd_pair: requires n >= 6");
    const auto [L1, L2] = disjoint_latin_pair(n);

    auto build = [n](const LatinSquare& L) {
        IncompleteGdd g;
        g.system.point_count = 3 * n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i >= 3 || j >= 3)
                    g.system.blocks.push_back({i, n + j, 2 * n + L.cells[i][j]});
        for (int part = 0; part < 3; ++part) {
            std::vector<int> group(n), hole;
            for (int p = 0; p < n; ++p)
                group[p] = part * n + p;
            for (int p = 0; p < 3; ++p)
                hole.push_back(part * n + p);
            g.system.groups.push_back(std::move(group));
            g.holes.push_back(std::move(hole));
        }
        canonicalize(g.system);
        validate_igdd(g);
        return g;
    };
    auto a = build(L1);
    auto b = build(L2);
    if (intersection_size(a.system, b.system) != 0)
        throw Error("disjoint_igdd_pair: sides are not disjoint");
    return {std::move(a), std::move(b)};
}

std::pair<SetSystem, SetSystem> gdd_pair_intersection_one(int g, std::uint64_t seed,
                                                          std::uint64_t budget) {
    if (g == 3)
        throw PreconditionError(
            "gdd_pair_intersection_one: intersection 1 not achievable for type 3^3");
    if (g < 7 || g % 2 == 0)
        throw PreconditionError("gdd_pair_intersection_one: requires odd g >= 7");

    // Both squares are of the form (row offset + column offset); cells agree
    // exactly when the row and column displacements of the mate cancel, so
    // the agreement count is a dot product of displacement histograms that
    // updates in O(1) per transposition.
    std::mt19937_64 rng(seed);
    std::vector<int> alpha(g), beta(g);
    std::vector<long long> hist_a(g), hist_b(g);
    long long agree = 0;

    auto recompute = [&] {
        std::fill(hist_a.begin(), hist_a.end(), 0);
        std::fill(hist_b.begin(), hist_b.end(), 0);
        for (int x = 0; x < g; ++x) {
            ++hist_a[((alpha[x] - x) % g + g) % g];
            ++hist_b[((beta[x] - x) % g + g) % g];
        }
        agree = 0;
        for (int c = 0; c < g; ++c)
            agree += hist_a[c] * hist_b[(g - c) % g];
    };
    auto randomize = [&] {
        for (int x = 0; x < g; ++x)
            alpha[x] = beta[x] = x;
        for (int x = g - 1; x > 0; --x) {
            std::swap(alpha[x], alpha[rng() % (x + 1)]);
            std::swap(beta[x], beta[rng() % (x + 1)]);
        }
        recompute();
    };

    randomize();
    std::uint64_t moves = 0;
    int stall = 0;
    while (agree != 1) {
        if (moves >= budget)
            throw BudgetError("gdd_pair_intersection_one: budget exhausted after " +
                              std::to_string(moves) + " moves");
        ++moves;
        if (stall > 1000) {
            randomize();
            stall = 0;
            continue;
        }
        auto& perm = (rng() & 1) ? alpha : beta;
        auto& hist = (&perm == &alpha) ? hist_a : hist_b;
        const auto& other = (&perm == &alpha) ? hist_b : hist_a;
        const int x1 = static_cast<int>(rng() % g);
        int x2 = static_cast<int>(rng() % g);
        while (x2 == x1)
            x2 = static_cast<int>(rng() % g);

        const long long before = agree;
        for (int x : {x1, x2}) {
            const int c = ((perm[x] - x) % g + g) % g;
            --hist[c];
            agree -= other[(g - c) % g];
        }
        std::swap(perm[x1], perm[x2]);
        for (int x : {x1, x2}) {
            const int c = ((perm[x] - x) % g + g) % g;
            ++hist[c];
            agree += other[(g - c) % g];
        }
        if (std::abs(agree - 1) > std::abs(before - 1)) {
            // Undo: the same swap restores both permutations and histograms.
            for (int x : {x1, x2}) {
                const int c = ((perm[x] - x) % g + g) % g;
                --hist[c];
                agree -= other[(g - c) % g];
            }
            std::swap(perm[x1], perm[x2]);
            for (int x : {x1, x2}) {
                const int c = ((perm[x] - x) % g + g) % g;
                ++hist[c];
                agree += other[(g - c) % g];
            }
            ++stall;
        } else if (agree == before) {
            ++stall;
        } else {
            stall = 0;
        }
    }

    LatinSquare L1, L2;
    L1.side = L2.side = g;
    L1.cells.assign(g, std::vector<int>(g));
    L2.cells.assign(g, std::vector<int>(g));
    for (int x = 0; x < g; ++x)
        for (int y = 0; y < g; ++y) {
            L1.cells[x][y] = (x + y) % g;
            L2.cells[x][y] = (alpha[x] + beta[y]) % g;
        }

    // Independent recount, then move the agreeing cell to (0,0) with entry 0
    // by relabeling rows, columns and symbols of both squares identically.
    int x0 = -1, y0 = -1;
    long long found = 0;
    for (int x = 0; x < g; ++x)
        for (int y = 0; y < g; ++y)
            if (L1.cells[x][y] == L2.cells[x][y]) {
                x0 = x;
                y0 = y;
                ++found;
            }
    if (found != 1)
        throw Error("gdd_pair_intersection_one: agreement bookkeeping diverged");
    const int s0 = L1.cells[x0][y0];
    for (auto* L : {&L1, &L2}) {
        std::swap(L->cells[x0], L->cells[0]);
        for (int x = 0; x < g; ++x)
            std::swap(L->cells[x][y0], L->cells[x][0]);
        for (int x = 0; x < g; ++x)
            for (int y = 0; y < g; ++y) {
                int& v = L->cells[x][y];
                v = v == s0 ? 0 : v == 0 ? s0 : v;
            }
    }

    auto a = gdd_from_latin(L1);
    auto b = gdd_from_latin(L2);
    if (intersection_size(a, b) != 1)
        throw Error("gdd_pair_intersection_one: intersection is not exactly one");
    return {std::move(a), std::move(b)};
}

std::pair<SetSystem, SetSystem> gdd_pair_3_1(int r, std::uint64_t seed, std::uint64_t budget) {
    const int n = 3 + r;
    const bool residue_ok = n % 6 == 1 || n % 6 == 3;
    if (!residue_ok || !(r == 4 || r == 6 || n >= 13))
        throw PreconditionError("gdd_pair_3_1: parameters inadmissible for a disjoint pair");

    // A triple system through {0,1,2} minus that block is a design of type
    // 3^1 1^r; a mate comes from disjointifying it with {0,1,2} held stable.
    SetSystem sts = steiner_triple_system(n);
    const std::vector<int> b0 = sts.blocks.front();
    std::vector<int> pi(n, -1);
    for (int i = 0; i < 3; ++i)
        pi[b0[i]] = i;
    int next = 3;
    for (int p = 0; p < n; ++p)
        if (pi[p] == -1)
            pi[p] = next++;
    SetSystem stripped = relabeled(sts, pi);
    stripped.blocks.erase(std::find(stripped.blocks.begin(), stripped.blocks.end(),
                                    std::vector<int>{0, 1, 2}));

    DisjointifyOptions opts;
    opts.fixed_setwise = {0, 1, 2};
    auto found = disjointify(stripped, 2, seed, budget, opts);

    std::pair<SetSystem, SetSystem> out{std::move(found.systems[0]),
                                        std::move(found.systems[1])};
    for (auto* side : {&out.first, &out.second}) {
        side->groups.clear();
        side->groups.push_back({0, 1, 2});
        for (int p = 3; p < n; ++p)
            side->groups.push_back({p});
        canonicalize(*side);
        validate_gdd_type(*side, [&] {
            std::vector<int> type{3};
            type.insert(type.end(), r, 1);
            return type;
        }());
    }
    if (intersection_size(out.first, out.second) != 0)
        throw Error("gdd_pair_3_1: sides are not disjoint");
    return out;
}

std::pair<SetSystem, SetSystem> gdd_pair_5_1(int t, std::uint64_t seed, std::uint64_t budget) {
    if (t < 0)
        throw PreconditionError("gdd_pair_5_1: requires t >= 0");

    std::pair<SetSystem, SetSystem> out;
    out.first.point_count = out.second.point_count = 6 * t + 5;

    if (t == 0) {
        // Five points in one group admit no block at all.
    } else if (t == 1 || t == 2) {
        auto load = [&](int side) {
            SetSystem s;
            s.point_count = 6 * t + 5;
            if (t == 1)
                for (const auto& b : kPair6tBase1[side])
                    s.blocks.push_back({b[0], b[1], b[2]});
            else
                for (const auto& b : kPair6tBase2[side])
                    s.blocks.push_back({b[0], b[1], b[2]});
            return s;
        };
        out.first = load(0);
        out.second = load(1);
    } else if (t % 3 != 1) {
        // Glue a type (2t+1)^3 pair meeting in one block onto copies of a
        // type 3^1 1^(2t) pair, one copy per group, through two new points.
        const int m = 2 * t + 1;
        const int inf1 = 3 * m, inf2 = 3 * m + 1;
        auto [big_a, big_b] = gdd_pair_intersection_one(m, mix_seed(seed, 1), budget);
        const std::vector<int> common{0, m, 2 * m};
        for (auto* side : {&big_a, &big_b}) {
            auto it = std::find(side->blocks.begin(), side->blocks.end(), common);
            if (it == side->blocks.end())
                throw Error("gdd_pair_5_1: common block is not in canonical position");
            side->blocks.erase(it);
            side->point_count = 6 * t + 5;
        }

        auto [small_a, small_b] = gdd_pair_3_1(2 * t, mix_seed(seed, 2), budget);
        for (int part = 0; part < 3; ++part) {
            // Group {0,1,2} lands on {(0,part), inf1, inf2}; the singletons
            // fill the rest of the part.
            std::vector<int> phi(small_a.point_count);
            phi[0] = part * m;
            phi[1] = inf1;
            phi[2] = inf2;
            for (int u = 3; u < small_a.point_count; ++u)
                phi[u] = part * m + u - 2;
            for (const auto& b : relabeled(small_a, phi, 6 * t + 5).blocks)
                big_a.blocks.push_back(b);
            for (const auto& b : relabeled(small_b, phi, 6 * t + 5).blocks)
                big_b.blocks.push_back(b);
        }

        const std::vector<int> group5{0, m, 2 * m, inf1, inf2};
        std::vector<int> rho(6 * t + 5, -1);
        for (int i = 0; i < 5; ++i)
            rho[group5[i]] = i;
        int next = 5;
        for (int p = 0; p < 6 * t + 5; ++p)
            if (rho[p] == -1)
                rho[p] = next++;
        out.first = relabeled(big_a, rho);
        out.second = relabeled(big_b, rho);
        out.first.groups.clear();
        out.second.groups.clear();
    } else {
        // t = 1 (mod 3): an incomplete pair of type (2t+1,3)^3 leaves an
        // 11-point core (the holes plus two new points) that recursive
        // 5^1 1^(2t-2) pairs reduce to, and the Table I pair fills the core.
        const int m = 2 * t + 1;
        const int inf1 = 3 * m, inf2 = 3 * m + 1;
        auto [igdd_a, igdd_b] = disjoint_igdd_pair(m);
        SetSystem big_a = std::move(igdd_a.system);
        SetSystem big_b = std::move(igdd_b.system);
        big_a.groups.clear();
        big_b.groups.clear();
        big_a.point_count = big_b.point_count = 6 * t + 5;

        auto [rec_a, rec_b] = gdd_pair_5_1((t - 1) / 3, mix_seed(seed, 3), budget);
        for (int part = 0; part < 3; ++part) {
            // Group {0..4} lands on {(0..2,part), inf1, inf2}.
            std::vector<int> phi(rec_a.point_count);
            for (int i = 0; i < 3; ++i)
                phi[i] = part * m + i;
            phi[3] = inf1;
            phi[4] = inf2;
            for (int u = 5; u < rec_a.point_count; ++u)
                phi[u] = part * m + u - 2;
            for (const auto& b : relabeled(rec_a, phi, 6 * t + 5).blocks)
                big_a.blocks.push_back(b);
            for (const auto& b : relabeled(rec_b, phi, 6 * t + 5).blocks)
                big_b.blocks.push_back(b);
        }

        // The 11 core points in ascending order.
        std::vector<int> core;
        for (int part = 0; part < 3; ++part)
            for (int i = 0; i < 3; ++i)
                core.push_back(part * m + i);
        core.push_back(inf1);
        core.push_back(inf2);
        auto [fill_a, fill_b] = gdd_pair_5_1(1, mix_seed(seed, 4), budget);
        for (const auto& b : fill_a.blocks)
            big_a.blocks.push_back({core[b[0]], core[b[1]], core[b[2]]});
        for (const auto& b : fill_b.blocks)
            big_b.blocks.push_back({core[b[0]], core[b[1]], core[b[2]]});

        std::vector<int> rho(6 * t + 5, -1);
        for (int i = 0; i < 5; ++i)
            rho[core[i]] = i;
        int next = 5;
        for (int p = 0; p < 6 * t + 5; ++p)
            if (rho[p] == -1)
                rho[p] = next++;
        out.first = relabeled(big_a, rho);
        out.second = relabeled(big_b, rho);
        out.first.groups.clear();
        out.second.groups.clear();
    }

    const long long blocks_expected = (pair_count(6 * t + 5) - 10) / 3;
    std::vector<int> type{5};
    type.insert(type.end(), 6 * t, 1);
    for (auto* side : {&out.first, &out.second}) {
        attach_group5(*side);
        canonicalize(*side);
        validate_gdd_type(*side, type);
        if (static_cast<long long>(side->blocks.size()) != blocks_expected)
            throw Error("gdd_pair_5_1: wrong block count");
    }
    if (t > 0 && intersection_size(out.first, out.second) != 0)
        throw Error("gdd_pair_5_1: sides are not disjoint");
    return out;
}

}  // namespace cwc
