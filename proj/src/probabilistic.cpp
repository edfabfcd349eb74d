#include "cwc/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cwc/error.hpp"
#include "cwc/packings.hpp"

namespace cwc {

namespace {

// Overlap c = 2w-d+1 splits into the smallest overlap t that can still
// produce a conflict and the symbol agreements f that conflict then needs.
int split_t(int d, int w) { return (2 * w - d + 2) / 2; }
int split_f(int d, int w) { return (2 * w - d + 1) / 2; }

constexpr unsigned long long kSaturated = 1ULL << 62;

unsigned long long binom_capped(int a, int b) {
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) {
        if (r > kSaturated / static_cast<unsigned long long>(a - b + i))
            return kSaturated;
        r = r * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

void check_shape(int n, int d, int w, int q) {
    if (q < 3 || q > kMaxAlphabet)
        throw PreconditionError(
            "probabilistic_construct: q outside [3, 256] (a binary alphabet leaves no "
            "symbol choice)");
    if (w < 1 || w > n)
        throw PreconditionError("probabilistic_construct: need 1 <= w <= n");
    if (d < 1 || d > 2 * w)
        throw PreconditionError("probabilistic_construct: need 1 <= d <= 2w");
}

}  // namespace

int default_lambda(int d, int w, int q) {
    if (q < 3 || q > kMaxAlphabet)
        throw PreconditionError("default_lambda: q outside [3, 256]");
    if (w < 1 || d < 1 || d > 2 * w)
        throw PreconditionError("default_lambda: need 1 <= d <= 2w");
    const int t = split_t(d, w);
    const int p = d % 2 == 1 ? t : t - 1;
    unsigned __int128 power = 1;
    const unsigned __int128 cap = static_cast<unsigned __int128>(kSaturated) * kSaturated;
    for (int i = 0; i < p; ++i)
        power = std::min(power * static_cast<unsigned>(q - 1), cap);
    const unsigned __int128 b = binom_capped(w, t);
    // floor((power/b + 1) / 2) without leaving integers
    unsigned __int128 lam = (power + b) / (2 * b);
    lam = std::max<unsigned __int128>(lam, 1);
    lam = std::min<unsigned __int128>(lam, 1'000'000'000);
    return static_cast<int>(lam);
}

double conflict_expectation_bound(int n, int d, int w, int q, int lambda) {
    check_shape(n, d, w, q);
    if (lambda < 1)
        throw PreconditionError("conflict_expectation_bound: lambda is below 1");
    const int t = split_t(d, w);
    const int f = split_f(d, w);
    const double pairs = static_cast<double>(lambda) * (lambda - 1);
    return pairs * static_cast<double>(binom_capped(t, f)) /
           std::pow(static_cast<double>(q - 1), f) *
           static_cast<double>(binom_capped(n, t));
}

ProbabilisticRun probabilistic_construct(int n, int d, int w, int q,
                                         std::optional<int> lambda, std::uint64_t seed) {
    check_shape(n, d, w, q);
    const int lam = lambda ? *lambda : default_lambda(d, w, q);
    if (lam < 1)
        throw PreconditionError("probabilistic_construct: lambda is below 1");

    ProbabilisticRun run;
    run.seed = seed;
    run.lambda = lam;
    run.t = split_t(d, w);
    // Overlap above t would let two blocks conflict with a probability the
    // expectation bound never charges, so the packing caps it.
    run.packing = greedy_packing(n, w, run.t, lam, std::nullopt, run.t);

    std::mt19937_64 rng(seed);
    std::vector<Word> words;
    words.reserve(run.packing.blocks.size());
    for (const auto& block : run.packing.blocks) {
        Word u(static_cast<std::size_t>(n), 0);
        for (int p : block)
            u[p] = static_cast<std::uint8_t>(1 + rng() % static_cast<unsigned>(q - 1));
        words.push_back(std::move(u));
    }

    const std::size_t m = words.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (hamming_distance(words[i], words[j]) < static_cast<std::size_t>(d)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (const auto& nbrs : adj)
        run.conflicts_found += nbrs.size();

    std::vector<char> alive(m, 1);
    std::vector<std::size_t> degree(m);
    for (std::size_t i = 0; i < m; ++i)
        degree[i] = adj[i].size();
    for (;;) {
        std::size_t best = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (!alive[i] || degree[i] == 0)
                continue;
            if (best == m || degree[i] > degree[best] ||
                (degree[i] == degree[best] && words[i] < words[best]))
                best = i;
        }
        if (best == m)
            break;
        alive[best] = 0;
        degree[best] = 0;
        for (std::size_t v : adj[best])
            if (alive[v] && degree[v] > 0)
                --degree[v];
        ++run.deleted;
    }

    run.final.params = {n, d, w, q};
    for (std::size_t i = 0; i < m; ++i)
        if (alive[i])
            run.final.words.push_back(std::move(words[i]));
    canonicalize(run.final);
    run.final.provenance = "IX:" + std::to_string(run.t) + "-(" + std::to_string(n) + "," +
                           std::to_string(w) + "," + std::to_string(lam) + ")+rand(s" +
                           std::to_string(seed) + ")";
    if (!verify_code(run.final).valid)
        throw ValidationError("probabilistic_construct: survivors failed verification");
    return run;
}

}  // namespace cwc
