// Acceptance suite: ten go/no-go checks printed one line each, run against
// the library exactly as shipped. Every tolerance (runtime caps, the 0.95
// size ratio, the conflict mean threshold) is hard-coded next to the check
// it guards, and failures list what broke without stopping the other
// criteria.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwc/bounds.hpp"
#include "cwc/brute_force.hpp"
#include "cwc/code_io.hpp"
#include "cwc/gdd.hpp"
#include "cwc/lifting.hpp"
#include "cwc/probabilistic.hpp"
#include "cwc/set_systems.hpp"
#include "cwc/words.hpp"

namespace {

struct Criterion {
    int failures = 0;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    failed: " << what << '\n';
        }
    }
};

void finish(int index, const std::string& title, Criterion& c, const std::string& note = "") {
    std::cout << "criterion " << index << " (" << title << "): "
              << (c.failures == 0 ? "PASS" : "FAIL");
    if (!note.empty())
        std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (c.failures != 0)
        std::cout << c.detail.str();
    CHECK(c.failures == 0);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// All length-n weight-w words over symbols 0..q-1, via base-q odometers.
// Only used at q^n small enough to enumerate outright.
std::vector<cwc::Word> all_weight_words(int n, int w, int q) {
    std::vector<cwc::Word> words;
    cwc::Word u(n, 0);
    while (true) {
        int wt = 0;
        for (auto s : u)
            wt += s != 0;
        if (wt == w)
            words.push_back(u);
        int pos = n - 1;
        while (pos >= 0 && u[pos] == q - 1)
            u[pos--] = 0;
        if (pos < 0)
            break;
        ++u[pos];
    }
    return words;
}

std::string tuple_name(int n, int d, int w, int q) {
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(w) + "," +
           std::to_string(q) + ")";
}

}  // namespace

TEST_CASE("criterion 1: optimal distance-3 weight-2 grid") {
    Criterion c;
    std::string note;
    try {
        auto start = std::chrono::steady_clock::now();
        for (int q = 2; q <= 10; ++q)
            for (int n = 2; n <= 14; ++n) {
                long long expected = q <= n ? static_cast<long long>(q - 1) * n / 2
                                            : cwc::checked_binomial(n, 2);
                cwc::Code code = cwc::construct_n32(n, q);
                auto rep = cwc::verify_code(code);
                c.check(rep.valid, "verification at " + tuple_name(n, 3, 2, q));
                c.check(static_cast<long long>(code.words.size()) == expected,
                        "size " + std::to_string(code.words.size()) + " != " +
                            std::to_string(expected) + " at " + tuple_name(n, 3, 2, q));
            }
        double grid_seconds = seconds_since(start);
        c.check(grid_seconds < 10.0, "grid runtime " + std::to_string(grid_seconds) + "s >= 10s");

        for (int q = 2; q <= 4; ++q)
            for (int n = 2; n <= 7; ++n) {
                auto brute = cwc::brute_force_max(n, 3, 2, q);
                c.check(brute.completed, "brute search incomplete at " + tuple_name(n, 3, 2, q));
                long long expected = q <= n ? static_cast<long long>(q - 1) * n / 2
                                            : cwc::checked_binomial(n, 2);
                c.check(static_cast<long long>(brute.witness.words.size()) == expected,
                        "brute size mismatch at " + tuple_name(n, 3, 2, q));
            }
        std::ostringstream os;
        os << "117 constructions in " << grid_seconds << "s";
        note = os.str();
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(1, "optimal distance-3 weight-2 grid", c, note);
}

TEST_CASE("criterion 2: cyclic codes at lengths 6 and 7") {
    Criterion c;
    try {
        for (int q = 4; q <= 6; ++q) {
            auto seven = cwc::construct_n43(7, q);
            c.check(seven.complete, "length 7 incomplete at q=" + std::to_string(q));
            c.check(static_cast<long long>(seven.code.words.size()) == 7LL * (q - 1),
                    "length 7 size != 7(q-1) at q=" + std::to_string(q));
            auto vrep = cwc::verify_code(seven.code);
            c.check(vrep.valid && vrep.actual_min_distance && *vrep.actual_min_distance >= 4,
                    "length 7 distance check failed at q=" + std::to_string(q));

            auto six = cwc::construct_n43(6, q);
            c.check(six.complete, "length 6 incomplete at q=" + std::to_string(q));
            c.check(static_cast<long long>(six.code.words.size()) == 4LL * (q - 1),
                    "length 6 size != 4(q-1) at q=" + std::to_string(q));
            auto vrep6 = cwc::verify_code(six.code);
            c.check(vrep6.valid && vrep6.actual_min_distance && *vrep6.actual_min_distance >= 4,
                    "length 6 distance check failed at q=" + std::to_string(q));
        }
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(2, "cyclic codes at lengths 6 and 7", c);
}

TEST_CASE("criterion 3: ternary distance-4 weight-3 residues") {
    Criterion c;
    try {
        for (int n = 6; n <= 25; ++n) {
            auto expected = cwc::exact_value(n, 4, 3, 3);
            c.check(expected.has_value(), "no exact value at n=" + std::to_string(n));
            if (!expected)
                continue;
            auto r = cwc::construct_n43(n, 3, 1, 4'000'000);
            c.check(r.complete, "construction incomplete at n=" + std::to_string(n));
            c.check(static_cast<long long>(r.code.words.size()) == expected->value,
                    "size " + std::to_string(r.code.words.size()) + " != " +
                        std::to_string(expected->value) + " at n=" + std::to_string(n));
            auto vrep = cwc::verify_code(r.code);
            c.check(vrep.valid && vrep.actual_min_distance && *vrep.actual_min_distance >= 4,
                    "verification failed at n=" + std::to_string(n));
        }
        const std::pair<int, long long> pins[] = {{9, 24}, {10, 26}, {11, 35}, {13, 52}};
        for (auto [n, value] : pins) {
            auto expected = cwc::exact_value(n, 4, 3, 3);
            c.check(expected && expected->value == value,
                    "pinned value mismatch at n=" + std::to_string(n));
        }
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(3, "ternary distance-4 weight-3 residues", c);
}

TEST_CASE("criterion 4: disjoint group-divisible pairs") {
    Criterion c;
    std::string note;
    try {
        auto check_pair = [&c](const cwc::SetSystem& a, const cwc::SetSystem& b, int t,
                               std::size_t blocks, const std::string& label) {
            std::vector<int> type{5};
            for (int i = 0; i < 6 * t; ++i)
                type.push_back(1);
            for (const auto* s : {&a, &b}) {
                try {
                    cwc::validate_gdd_type(*s, type);
                } catch (const cwc::Error& e) {
                    c.check(false, label + " validation: " + e.what());
                }
                c.check(s->blocks.size() == blocks,
                        label + " block count " + std::to_string(s->blocks.size()) + " != " +
                            std::to_string(blocks));
            }
            c.check(cwc::intersection_size(a, b) == 0, label + " images intersect");
        };

        auto t1a = cwc::read_design_file(std::string(CWC_FIXTURE_DIR) + "/table1_a.txt");
        auto t1b = cwc::read_design_file(std::string(CWC_FIXTURE_DIR) + "/table1_b.txt");
        check_pair(t1a, t1b, 1, 15, "fixture pair 1");
        auto t2a = cwc::read_design_file(std::string(CWC_FIXTURE_DIR) + "/table2_a.txt");
        auto t2b = cwc::read_design_file(std::string(CWC_FIXTURE_DIR) + "/table2_b.txt");
        check_pair(t2a, t2b, 2, 42, "fixture pair 2");

        double worst = 0.0;
        for (int t = 0; t <= 5; ++t) {
            auto start = std::chrono::steady_clock::now();
            auto [a, b] = cwc::gdd_pair_5_1(t, 1, 8'000'000);
            double took = seconds_since(start);
            worst = std::max(worst, took);
            c.check(took < 60.0,
                    "t=" + std::to_string(t) + " took " + std::to_string(took) + "s >= 60s");
            // Cross-group pairs once each: ((6t+5)(6t+4)/2 - 10) / 3 blocks.
            int points = 6 * t + 5;
            auto blocks = static_cast<std::size_t>((points * (points - 1) / 2 - 10) / 3);
            check_pair(a, b, t, blocks, "generated pair t=" + std::to_string(t));
        }
        std::ostringstream os;
        os << "slowest generated pair " << worst << "s";
        note = os.str();
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(4, "disjoint group-divisible pairs", c, note);
}

TEST_CASE("criterion 5: the (13,6,4) ladder") {
    Criterion c;
    std::string note;
    try {
        for (int q = 2; q <= 6; ++q) {
            auto r = cwc::construct_13_6_4(q, 1, 10'000'000);
            c.check(r.complete, "incomplete at q=" + std::to_string(q));
            c.check(static_cast<long long>(r.code.words.size()) == 13LL * (q - 1),
                    "size != 13(q-1) at q=" + std::to_string(q));
            auto vrep = cwc::verify_code(r.code);
            c.check(vrep.valid && vrep.actual_min_distance && *vrep.actual_min_distance >= 6,
                    "distance check failed at q=" + std::to_string(q));
            if (q == 6 && !r.complete && r.code.words.size() == 52) {
                c.detail << "    the q=6 target 65 is unattainable: only four "
                            "design images can pairwise share <= 2 points "
                            "(exhaustive), and no 65-word code exists at q=6 "
                            "because no maximum 65-block support packing "
                            "admits the required five-symbol assignment\n";
            }
        }
        // The 55-image target behind large alphabets is far beyond what a
        // local search reaches; the builder must say so rather than stall.
        auto big = cwc::construct_13_6_4(58, 1, 200'000);
        c.check(big.target_size == 715, "large-q target is not 715");
        c.check(!big.complete, "large-q run claims completeness");
        auto vbig = cwc::verify_code(big.code);
        c.check(vbig.valid, "large-q partial code failed verification");
        std::ostringstream os;
        os << "q=58 honest partial: " << big.code.words.size() << " of 715";
        note = os.str();
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(5, "the (13,6,4) ladder", c, note);
}

TEST_CASE("criterion 6: weight-3 partition classes") {
    Criterion c;
    try {
        for (int n = 5; n <= 16; ++n) {
            auto classes = cwc::graham_sloane_classes(n);
            c.check(static_cast<int>(classes.size()) == n,
                    "class count != n at n=" + std::to_string(n));
            std::set<cwc::Word> seen;
            long long total = 0;
            for (const auto& cls : classes) {
                total += static_cast<long long>(cls.words.size());
                for (const auto& u : cls.words)
                    seen.insert(u);
                auto vrep = cwc::verify_code(cls);
                bool distance_ok =
                    cls.words.size() < 2 ||
                    (vrep.actual_min_distance && *vrep.actual_min_distance >= 4);
                c.check(vrep.valid && distance_ok,
                        "class verification failed at n=" + std::to_string(n));
            }
            long long all = cwc::checked_binomial(n, 3);
            c.check(total == all && static_cast<long long>(seen.size()) == all,
                    "classes do not partition the weight-3 words at n=" + std::to_string(n));

            auto lift = cwc::construct_n43(n, n + 1);
            c.check(lift.complete &&
                        static_cast<long long>(lift.code.words.size()) == all,
                    "full lift missed C(n,3) at n=" + std::to_string(n));
        }
        auto seven = cwc::construct_n43(7, 8);
        c.check(seven.code.words.size() == 35, "length 7 full lift is not 35 words");
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(6, "weight-3 partition classes", c);
}

TEST_CASE("criterion 7: sphere sizes against enumeration") {
    Criterion c;
    try {
        long long cells = 0;
        for (int n = 1; n <= 8; ++n)
            for (int w = 0; w <= std::min(n, 4); ++w)
                for (int q = 2; q <= 4; ++q) {
                    auto words = all_weight_words(n, w, q);
                    cwc::Word center(n, 0);
                    for (int i = 0; i < w; ++i)
                        center[i] = 1;
                    for (int r = 0; r <= 4; ++r) {
                        long long count = 0;
                        for (const auto& u : words)
                            if (cwc::hamming_distance(u, center) <= static_cast<std::size_t>(r))
                                ++count;
                        long long predicted = cwc::sphere_size(n, w, q, r);
                        c.check(predicted == count,
                                "sphere mismatch at n=" + std::to_string(n) + " w=" +
                                    std::to_string(w) + " q=" + std::to_string(q) + " r=" +
                                    std::to_string(r) + ": " + std::to_string(predicted) +
                                    " != " + std::to_string(count));
                        ++cells;
                    }
                }
        c.check(cells == 510, "cell count drifted from the pinned grid");
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(7, "sphere sizes against enumeration", c);
}

TEST_CASE("criterion 8: randomized lift conflict accounting") {
    Criterion c;
    std::string note;
    try {
        const int zero_params[][4] = {{15, 5, 4, 7}, {12, 6, 4, 5}, {10, 5, 4, 3},
                                      {9, 4, 3, 4},  {14, 7, 5, 6}, {11, 6, 5, 4}};
        for (const auto& p : zero_params)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                auto run = cwc::probabilistic_construct(p[0], p[1], p[2], p[3], 1, seed);
                c.check(run.conflicts_found == 0,
                        "lambda=1 produced conflicts at " +
                            tuple_name(p[0], p[1], p[2], p[3]) + " seed " +
                            std::to_string(seed));
                auto vrep = cwc::verify_code(run.final);
                c.check(vrep.valid, "lambda=1 code failed verification at " +
                                        tuple_name(p[0], p[1], p[2], p[3]));
            }

        // Expected conflicts at (15,5,4,7) with lambda=2 are at most 35/6
        // per run; the empirical mean over 200 seeds must stay at or below
        // that, compared in exact arithmetic: 6 * total <= 35 * 200.
        std::uint64_t total_conflicts = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto run = cwc::probabilistic_construct(15, 5, 4, 7, 2, seed);
            total_conflicts += run.conflicts_found;
            auto vrep = cwc::verify_code(run.final);
            bool distance_ok = run.final.words.size() < 2 ||
                               (vrep.actual_min_distance && *vrep.actual_min_distance >= 5);
            c.check(vrep.valid && distance_ok,
                    "final code failed verification at seed " + std::to_string(seed));
        }
        c.check(6 * total_conflicts <= 35 * 200,
                "mean conflicts " + std::to_string(total_conflicts) + "/200 exceeds 35/6");
        std::ostringstream os;
        os << "mean conflicts " << total_conflicts << "/200, bound 35/6";
        note = os.str();
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(8, "randomized lift conflict accounting", c, note);
}

TEST_CASE("criterion 9: packing lift overtakes the covering bound") {
    Criterion c;
    std::string note;
    try {
        int crossover = -1;
        for (int n = 6; n <= 200; ++n) {
            long long covering = cwc::gv_lower(n, 5, 4, 3).value;
            long long built = 0;
            try {
                cwc::Code code = cwc::construct_w_plus_1(n, 4, 3, 2, 1, 2'000'000);
                auto vrep = cwc::verify_code(code);
                c.check(vrep.valid, "packing lift failed verification at n=" + std::to_string(n));
                built = static_cast<long long>(code.words.size());
            } catch (const cwc::BudgetError&) {
                continue;  // too small or unlucky; the next length gets its chance
            }
            if (built > covering) {
                crossover = n;
                note = "crossover at n=" + std::to_string(n) + ": " + std::to_string(built) +
                       " > " + std::to_string(covering);
                break;
            }
        }
        c.check(crossover > 0, "no length up to 200 beat the covering bound");
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(9, "packing lift overtakes the covering bound", c, note);
}

TEST_CASE("criterion 10: global consistency sweep") {
    Criterion c;
    std::string note;
    try {
        for (int n = 2; n <= 14; ++n)
            for (int w = 1; w <= std::min(n, 5); ++w)
                for (int d = 2; d <= 2 * w; ++d)
                    for (int q = 2; q <= 8; ++q) {
                        auto rep = cwc::bound_report(n, d, w, q);
                        c.check(rep.best_lower <= rep.best_upper,
                                "bracket inverted at " + tuple_name(n, d, w, q));
                        if (rep.exact)
                            c.check(*rep.exact == rep.best_lower && *rep.exact == rep.best_upper,
                                    "exact value escapes its bracket at " +
                                        tuple_name(n, d, w, q));

                        long long count = cwc::checked_binomial(n, w);
                        for (int i = 0; i < w && count <= 700; ++i)
                            count *= q - 1;
                        if (count > 700)
                            continue;
                        auto brute = cwc::brute_force_max(n, d, w, q, 5'000'000);
                        if (!brute.completed)
                            continue;
                        long long best =
                            static_cast<long long>(brute.witness.words.size());
                        if (rep.exact)
                            c.check(best == *rep.exact, "brute force disagrees with the exact "
                                                        "value at " +
                                                            tuple_name(n, d, w, q));
                        c.check(best >= rep.best_lower && best <= rep.best_upper,
                                "brute force escapes the bracket at " + tuple_name(n, d, w, q));
                    }

        // Long ternary codes must stay within 5% of the smooth size target,
        // compared in exact arithmetic: 60 * size >= 19 * n(n-1).
        long long worst_margin = -1;
        int worst_n = 0;
        for (int n = 30; n <= 60; ++n) {
            auto r = cwc::construct_n43(n, 3, 1, 6'000'000);
            auto vrep = cwc::verify_code(r.code);
            c.check(vrep.valid, "long ternary code failed verification at n=" + std::to_string(n));
            long long margin = 60LL * static_cast<long long>(r.code.words.size()) -
                               19LL * n * (n - 1);
            c.check(margin >= 0, "size ratio below 0.95 at n=" + std::to_string(n));
            if (worst_margin < 0 || margin < worst_margin) {
                worst_margin = margin;
                worst_n = n;
            }
        }
        std::ostringstream os;
        os << "tightest ratio margin " << worst_margin << "/60 words at n=" << worst_n;
        note = os.str();
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    finish(10, "global consistency sweep", c, note);
}
