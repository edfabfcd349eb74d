#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "cwc/brute_force.hpp"
#include "cwc/lifting.hpp"
#include "cwc/probabilistic.hpp"
#include "cwc/set_systems.hpp"
#include "cwc/steiner.hpp"

using namespace cwc;

namespace {

// Test-side oracles: plain loops, no library validators.

int plain_distance(const Word& u, const Word& v) {
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        d += u[i] != v[i];
    return d;
}

int plain_min_distance(const Code& c) {
    int best = 2 * c.params.n + 1;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, plain_distance(c.words[i], c.words[j]));
    return best;
}

// Every word has length n, weight w, symbols below q, and the claimed
// minimum distance holds over all pairs.
void check_code(const Code& c) {
    for (const Word& u : c.words) {
        REQUIRE(static_cast<int>(u.size()) == c.params.n);
        int wt = 0;
        for (std::uint8_t x : u) {
            REQUIRE(x < c.params.q);
            wt += x != 0;
        }
        REQUIRE(wt == c.params.w);
    }
    if (c.words.size() >= 2)
        REQUIRE(plain_min_distance(c) >= c.params.d);
}

Word word_from(int n, std::initializer_list<std::pair<int, int>> entries) {
    Word u(static_cast<std::size_t>(n), 0);
    for (auto [pos, sym] : entries)
        u[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(sym);
    return u;
}

// Two block-disjoint cyclic Steiner triple systems of order 7, from the
// difference sets {0,1,3} and {0,2,3}.
SetSystem cyclic_sts_7(std::initializer_list<int> base) {
    SetSystem s;
    s.point_count = 7;
    for (int t = 0; t < 7; ++t) {
        std::vector<int> block;
        for (int b : base)
            block.push_back((b + t) % 7);
        s.blocks.push_back(std::move(block));
    }
    canonicalize(s);
    validate_steiner(s);
    return s;
}

long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }

long long n32_size(int n, int q) {
    return q <= n ? static_cast<long long>(q - 1) * n / 2
                  : static_cast<long long>(n) * (n - 1) / 2;
}

// Exact (n,4,3)_3 sizes by residue class of n mod 6.
long long n43_ternary_size(long long n) {
    switch (n % 6) {
        case 1:
        case 3:
            return n * (n - 1) / 3;
        case 0:
        case 2:
            return n * (n - 2) / 3;
        case 5:
            return (n * (n - 1) - 2) / 3 - 1;
        default:
            return (n * n - 2 * n - 2) / 3;
    }
}

}  // namespace

TEST_CASE("lift merges symbol classes and recomputes the distance") {
    const Code a = packing_code_convert(cyclic_sts_7({0, 1, 3}));
    const Code b = packing_code_convert(cyclic_sts_7({0, 2, 3}));

    LiftPlan plan;
    plan.q = 3;
    plan.classes.push_back({a, 1});
    plan.classes.push_back({b, 2});
    const Code c = lift(plan);

    CHECK(c.words.size() == a.words.size() + b.words.size());
    CHECK(c.params.n == 7);
    CHECK(c.params.w == 3);
    CHECK(c.params.q == 3);
    // Same class: disjoint blocks or one shared point. Cross class: every
    // pair of points pins a block in each system, so overlap two happens
    // and the minimum distance lands exactly on 4.
    CHECK(c.params.d == 4);
    CHECK(plain_min_distance(c) == 4);
    check_code(c);

    // Symbol counts: each class keeps its size under its own symbol.
    std::size_t ones = 0, twos = 0;
    for (const Word& u : c.words) {
        ones += std::count(u.begin(), u.end(), 1) == 3;
        twos += std::count(u.begin(), u.end(), 2) == 3;
    }
    CHECK(ones == a.words.size());
    CHECK(twos == b.words.size());
}

TEST_CASE("lifting a single class by symbol one returns the binary code") {
    const Code a = packing_code_convert(cyclic_sts_7({0, 1, 3}));
    LiftPlan plan;
    plan.q = 2;
    plan.classes.push_back({a, 1});
    const Code c = lift(plan);
    Code expected = a;
    canonicalize(expected);
    CHECK(c.words == expected.words);
    CHECK(c.params.d == 4);
}

TEST_CASE("lift rejects malformed plans") {
    const Code a = packing_code_convert(cyclic_sts_7({0, 1, 3}));
    const Code b = packing_code_convert(cyclic_sts_7({0, 2, 3}));

    LiftPlan empty;
    empty.q = 3;
    CHECK_THROWS_AS(lift(empty), PreconditionError);

    LiftPlan dup_symbol;
    dup_symbol.q = 4;
    dup_symbol.classes.push_back({a, 1});
    dup_symbol.classes.push_back({b, 1});
    CHECK_THROWS_AS(lift(dup_symbol), PreconditionError);

    LiftPlan shared_word;
    shared_word.q = 4;
    shared_word.classes.push_back({a, 1});
    shared_word.classes.push_back({a, 2});
    CHECK_THROWS_AS(lift(shared_word), PreconditionError);

    LiftPlan bad_symbol;
    bad_symbol.q = 2;
    bad_symbol.classes.push_back({a, 2});  // symbol must stay below q
    CHECK_THROWS_AS(lift(bad_symbol), PreconditionError);

    Code wrong_w = a;
    wrong_w.params.w = 2;
    LiftPlan mismatched;
    mismatched.q = 3;
    mismatched.classes.push_back({a, 1});
    mismatched.classes.push_back({wrong_w, 2});
    CHECK_THROWS_AS(lift(mismatched), PreconditionError);
}

TEST_CASE("construct_n32 hits the dispatch size across the grid") {
    for (int q = 2; q <= 12; ++q)
        for (int n = 2; n <= 14; ++n) {
            CAPTURE(n);
            CAPTURE(q);
            const Code c = construct_n32(n, q);
            CHECK(static_cast<long long>(c.words.size()) == n32_size(n, q));
            CHECK(c.params.d == 3);
            check_code(c);
        }
}

TEST_CASE("construct_n32 matches brute force at small scale") {
    for (int q = 2; q <= 4; ++q)
        for (int n = 2; n <= 7; ++n) {
            CAPTURE(n);
            CAPTURE(q);
            const BruteForceResult bf = brute_force_max(n, 3, 2, q);
            REQUIRE(bf.completed);
            CHECK(construct_n32(n, q).words.size() == bf.witness.words.size());
        }
}

TEST_CASE("construct_n32 pinned examples") {
    CHECK(construct_n32(4, 3).words.size() == 4);
    CHECK(construct_n32(3, 5).words.size() == 3);

    const Code c = construct_n32(5, 4);
    CHECK(c.words.size() == 7);
    // Odd n with even q-1 adds exactly one word mixing two symbols.
    std::size_t mixed = 0;
    for (const Word& u : c.words) {
        std::set<std::uint8_t> symbols;
        for (std::uint8_t x : u)
            if (x)
                symbols.insert(x);
        mixed += symbols.size() == 2;
    }
    CHECK(mixed == 1);

    CHECK_THROWS_AS(construct_n32(1, 3), PreconditionError);
    CHECK_THROWS_AS(construct_n32(5, 1), PreconditionError);
}

TEST_CASE("graham_sloane_classes partition the triples at distance four") {
    for (int n = 5; n <= 16; ++n) {
        CAPTURE(n);
        const std::vector<Code> classes = graham_sloane_classes(n);
        REQUIRE(static_cast<int>(classes.size()) == n);
        std::set<Word> all;
        long long total = 0;
        for (int r = 0; r < n; ++r) {
            check_code(classes[r]);
            if (classes[r].words.size() >= 2)
                CHECK(plain_min_distance(classes[r]) >= 4);
            for (const Word& u : classes[r].words) {
                int sum = 0;
                for (int i = 0; i < n; ++i)
                    if (u[i])
                        sum += i;
                CHECK(sum % n == r);
                all.insert(u);
            }
            total += static_cast<long long>(classes[r].words.size());
        }
        CHECK(total == choose3(n));
        CHECK(static_cast<long long>(all.size()) == total);
    }

    for (const Code& cls : graham_sloane_classes(7))
        CHECK(cls.words.size() == 5);
}

TEST_CASE("construct_n43 length-7 and length-6 families") {
    // (7, q) for q in 4..6 uses the cyclic codes; q = 7 reuses the largest
    // one, which already meets the count-all-supports cap of C(7,3).
    for (int q : {4, 5, 6}) {
        CAPTURE(q);
        const ConstructResult r = construct_n43(7, q);
        CHECK(r.complete);
        CHECK(static_cast<long long>(r.code.words.size()) == 7LL * (q - 1));
        CHECK(r.code.params.d == 4);
        check_code(r.code);
    }
    const ConstructResult full = construct_n43(7, 7);
    CHECK(full.complete);
    CHECK(full.code.words.size() == 35);
    check_code(full.code);

    for (int q : {4, 5, 6}) {
        CAPTURE(q);
        const ConstructResult r = construct_n43(6, q);
        CHECK(r.complete);
        CHECK(static_cast<long long>(r.code.words.size()) == 4LL * (q - 1));
        CHECK(r.code.params.n == 6);
        CHECK(r.code.params.d == 4);
        check_code(r.code);
    }
}

TEST_CASE("construct_n43 reaches every exact ternary value") {
    for (int n = 6; n <= 25; ++n) {
        CAPTURE(n);
        const ConstructResult r = construct_n43(n, 3);
        CHECK(r.complete);
        CHECK(static_cast<long long>(r.code.words.size()) == n43_ternary_size(n));
        CHECK(r.code.params.d == 4);
        check_code(r.code);
    }
    CHECK(construct_n43(9, 3).code.words.size() == 24);
    CHECK(construct_n43(10, 3).code.words.size() == 26);
    CHECK(construct_n43(11, 3).code.words.size() == 35);
    CHECK(construct_n43(13, 3).code.words.size() == 52);
}

TEST_CASE("construct_n43 lifts the full triple partition for big alphabets") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{7, 9}, {8, 9}, {6, 7}, {10, 11}}) {
        CAPTURE(n);
        CAPTURE(q);
        const ConstructResult r = construct_n43(n, q);
        CHECK(r.complete);
        CHECK(static_cast<long long>(r.code.words.size()) == choose3(n));
        check_code(r.code);
    }
}

TEST_CASE("construct_n43 tiny lengths fall back to exact search") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        const ConstructResult r = construct_n43(n, q);
        CHECK(r.complete);
        const BruteForceResult bf = brute_force_max(n, 4, 3, q);
        REQUIRE(bf.completed);
        CHECK(r.code.words.size() == bf.witness.words.size());
        check_code(r.code);
    }
}

TEST_CASE("packing lifts land on their dispatch sizes") {
    // n = 5 (mod 6): q-1 disjoint maximum packings, (n(n-1)-8)/6 blocks each.
    const ConstructResult five = packing_lift_n43(11, 4);
    CHECK(five.complete);
    CHECK(five.code.words.size() == 51);
    CHECK(five.target_size == 51);
    CHECK(five.code.params.d == 4);
    check_code(five.code);

    // n = 4 (mod 6): one more packing order up, shortened at a coordinate on
    // exactly one leave.
    const ConstructResult four = packing_lift_n43(10, 4);
    CHECK(four.complete);
    CHECK(four.target_size == 37);
    CHECK(static_cast<long long>(four.code.words.size()) == four.target_size);
    CHECK(four.code.params.n == 10);
    CHECK(four.code.params.d == 4);
    check_code(four.code);

    // Binary editions agree with the known packing numbers.
    CHECK(packing_lift_n43(11, 2).code.words.size() == 17);
    CHECK(packing_lift_n43(10, 2).code.words.size() == 13);

    CHECK_THROWS_AS(packing_lift_n43(12, 3), PreconditionError);
}

TEST_CASE("shorten drops the coordinate and the words that cover it") {
    Code c;
    c.params = {4, 1, 2, 2};
    c.words = {word_from(4, {{1, 1}, {2, 1}}), word_from(4, {{2, 1}, {3, 1}}),
               word_from(4, {{1, 1}, {3, 1}})};

    const auto counts = coordinate_cover_counts(c);
    CHECK(counts == std::vector<std::size_t>{0, 2, 2, 2});
    CHECK(best_shorten_coordinate(c) == 0);

    // Nothing covers coordinate 0, so shortening there keeps every word.
    const Code untouched = shorten(c, 0);
    CHECK(untouched.words.size() == 3);
    CHECK(untouched.params.n == 3);

    const Code cut = shorten(c, 1);
    CHECK(cut.words.size() == 1);
    CHECK(cut.words[0] == word_from(3, {{1, 1}, {2, 1}}));

    Code lone;
    lone.params = {2, 1, 2, 2};
    lone.words = {word_from(2, {{0, 1}, {1, 1}})};
    CHECK_THROWS_AS(shorten(lone, 0), PreconditionError);
    CHECK_THROWS_AS(shorten(c, 4), PreconditionError);
}

TEST_CASE("construct_13_6_4 lifts disjoint design images") {
    const ConstructResult binary = construct_13_6_4(2);
    CHECK(binary.complete);
    CHECK(binary.code.words.size() == 13);
    CHECK(binary.code.params.d == 6);
    check_code(binary.code);

    const ConstructResult r = construct_13_6_4(5, 0, 2'000'000);
    CHECK(r.complete);
    CHECK(r.code.words.size() == 52);
    CHECK(r.code.params.d == 6);
    // Two images both cover any fixed pair, so some cross pair of blocks
    // shares two points and the distance is exactly 6.
    CHECK(plain_min_distance(r.code) == 6);
    check_code(r.code);

    // Repeat runs with one seed agree word for word.
    const ConstructResult again = construct_13_6_4(5, 0, 2'000'000);
    CHECK(again.code.words == r.code.words);

    // From q = 6 on the target is unreachable: at most four images can stay
    // pairwise compatible, so the result is an honest partial code no
    // matter the budget.
    const ConstructResult sat = construct_13_6_4(6, 0, 2'000'000);
    CHECK_FALSE(sat.complete);
    CHECK(sat.target_size == 65);
    CHECK(sat.code.words.size() == 52);
    CHECK(sat.code.params.d == 6);
    check_code(sat.code);

    const ConstructResult partial = construct_13_6_4(7, 0, 2'000'000);
    CHECK_FALSE(partial.complete);
    CHECK(partial.target_size == 78);
    CHECK(partial.code.words.size() == 52);
    CHECK(partial.code.params.d == 6);
    check_code(partial.code);
}

TEST_CASE("construct_w_plus_1 reaches odd distance w+1") {
    const Code c = construct_w_plus_1(13, 4, 3, 2);
    CHECK(c.params.d == 5);
    CHECK(c.params.w == 4);
    CHECK(!c.words.empty());
    CHECK(c.words.size() % 2 == 0);  // two classes of equal size
    CHECK(plain_min_distance(c) >= 5);
    check_code(c);

    // 2t must stay below w+2, and q-1 within w/t.
    CHECK_THROWS_AS(construct_w_plus_1(13, 4, 3, 3), PreconditionError);
    CHECK_THROWS_AS(construct_w_plus_1(13, 4, 4, 2), PreconditionError);
}

TEST_CASE("probabilistic_construct with multiplicity one never conflicts") {
    for (auto [n, d, w, q] : std::vector<std::array<int, 4>>{
             {8, 4, 3, 3}, {10, 5, 4, 4}, {12, 4, 3, 5}}) {
        CAPTURE(n);
        CAPTURE(d);
        const ProbabilisticRun run = probabilistic_construct(n, d, w, q, 1, 42);
        CHECK(run.conflicts_found == 0);
        CHECK(run.deleted == 0);
        CHECK(run.final.words.size() == run.packing.blocks.size());
        CHECK(run.final.params.d == d);
        CHECK(plain_min_distance(run.final) >= d);
        check_code(run.final);
    }
}

TEST_CASE("probabilistic_construct survivors always verify") {
    const ProbabilisticRun run = probabilistic_construct(15, 5, 4, 7, 2, 1);
    CHECK(run.lambda == 2);
    CHECK(run.t == 2);
    CHECK(run.conflicts_found % 2 == 0);  // ordered pairs
    CHECK(run.deleted <= run.conflicts_found);
    CHECK(run.final.words.size() + run.deleted == run.packing.blocks.size());
    CHECK(plain_min_distance(run.final) >= 5);
    check_code(run.final);

    // The packing is deterministic; the seed only drives the symbols.
    const ProbabilisticRun other = probabilistic_construct(15, 5, 4, 7, 2, 99);
    CHECK(other.packing.blocks == run.packing.blocks);

    const ProbabilisticRun repeat = probabilistic_construct(15, 5, 4, 7, 2, 1);
    CHECK(repeat.final.words == run.final.words);
    CHECK(repeat.conflicts_found == run.conflicts_found);

    CHECK_THROWS_AS(probabilistic_construct(15, 5, 4, 2), PreconditionError);
    CHECK_THROWS_AS(probabilistic_construct(15, 5, 4, 7, 0), PreconditionError);
    CHECK_THROWS_AS(probabilistic_construct(15, 9, 4, 7), PreconditionError);
}

TEST_CASE("default_lambda follows the balancing formula") {
    CHECK(default_lambda(4, 3, 3) == 1);
    CHECK(default_lambda(4, 3, 10) == 2);
    CHECK(default_lambda(5, 4, 7) == 3);
    CHECK(default_lambda(3, 2, 5) == 1);
    // t = 2, p = 2: floor((99^2 / C(4,2) + 1) / 2).
    CHECK(default_lambda(5, 4, 100) == 817);
    CHECK_THROWS_AS(default_lambda(5, 4, 2), PreconditionError);

    const double bound = conflict_expectation_bound(15, 5, 4, 7, 2);
    CHECK(bound == doctest::Approx(35.0 / 6.0));
    CHECK(conflict_expectation_bound(15, 5, 4, 7, 1) == 0.0);
}

TEST_CASE("partition_lift_asymptotic keeps the pigeonhole share") {
    const Code c = partition_lift_asymptotic(13, 4);
    CHECK(c.params.d == 4);
    CHECK(c.words.size() >= 59);
    check_code(c);

    const Code small = partition_lift_asymptotic(9, 3);
    CHECK(small.words.size() >= 18);
    check_code(small);

    // q = n+1 keeps a single part holding every class.
    for (int n : {6, 7, 9}) {
        CAPTURE(n);
        const Code full = partition_lift_asymptotic(n, n + 1);
        CHECK(static_cast<long long>(full.words.size()) == choose3(n));
        check_code(full);
    }

    CHECK_THROWS_AS(partition_lift_asymptotic(7, 9), PreconditionError);
}
