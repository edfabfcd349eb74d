#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwc/words.hpp"

namespace cwc {

// Largest value any bound is allowed to take. Arithmetic is exact, runs in
// 128-bit intermediates, and throws Error instead of saturating or wrapping
// when a result would exceed this cap; a silently clipped upper bound would
// understate the truth, which is worse than refusing.
inline constexpr long long kBoundValueCap = 4'000'000'000'000'000'000LL;

enum class BoundKind { exact, upper, lower };

// One line of the bound ledger for a parameter set. assumptions records the
// side conditions the value leans on (residues, alphabet ranges, counting
// estimates). rigorous stays true only for statements valid at the exact
// finite parameters; asymptotic reference values carry rigorous = false and
// never feed best-bound aggregation.
struct BoundValue {
    long long value = 0;
    BoundKind kind = BoundKind::upper;
    std::string provenance;
    std::string assumptions;
    bool rigorous = true;
};

// Exact fraction in lowest terms; den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;
};

// Smallest prime p with x = p^k, when one exists. x < 2 never qualifies.
std::optional<long long> prime_power_base(long long x);

long long checked_binomial(int n, int k);

// Length recursion: from a bound `inner` on codes of length n-1 at the same
// distance and weight, floor(n * inner / (n - w)) bounds length n. Requires
// w < n.
BoundValue svanstrom_length(int n, int d, int w, int q, long long inner);

// Weight recursion: from a bound `inner` on codes of length n-1 and weight
// w-1 at the same distance, floor(n (q-1) inner / w) bounds weight w.
// Requires w >= 1.
BoundValue svanstrom_weight(int n, int d, int w, int q, long long inner);

// Nested-floor bound on the maximum number of blocks in a t-(n, k, lambda)
// packing, floor(n/k floor((n-1)/(k-1) ... floor(lambda(n-t+1)/(k-t+1)))).
// Requires 1 <= t <= k <= n and lambda >= 1. assumptions records the looser
// counting form lambda C(n,t) / C(k,t).
BoundValue johnson_schonheim(int n, int k, int t, long long lambda);

// A_q(n, 2w, w) = floor(n / w): words at full distance have disjoint
// supports, and any partition of the coordinates into w-sets achieves it.
BoundValue exact_2w(int n, int w, int q);

// Triangle-packing ceiling floor((q-1) n / 3 * floor((n-1)/2)) for
// distance-4 weight-3 codes, and the smooth form (q-1) n (n-1) / 6 it
// truncates. Requires n >= 3.
BoundValue u_bound(int n, int q);
Rational b_value(int n, int q);

// Residue-table deficits of the best distance-4 weight-3 sizes below
// u_bound: the achievable size is at least U - delta within the alphabet
// ranges where the packing lift applies, and at most U - epsilon for every
// q. Require n = 4 or 5 (mod 6) and q >= 2.
long long n43_delta(int n, int q);
long long n43_epsilon(int n, int q);

// Best closed-form upper bound for distance-4 weight-3 codes: u_bound,
// minus one when n = 5 (mod 6) and q != 1 (mod 3), capped at C(n,3).
BoundValue n43_upper(int n, int q);

// Half-weight counting bound for codes of distance w+1 or more: supports
// are distinct, and a ceil(w/2)-set shared by more than (q-1)^ceil(w/2)
// supports would force two words within distance w. With h = ceil(w/2) the
// bound is floor((q-1)^h C(n,h) / C(w,h)). Requires 1 <= w <= n.
BoundValue lemma15_upper(int n, int w, int q);

// Symbol-aware packing bound for any 2 <= d <= 2w. Two words closer than d
// must share t support points (t = ceil((2w-d+1)/2)) and, for even d, agree
// on all but one symbol there; so the supports form a t-(n, w, L) multiset
// packing with L = (q-1)^t for odd d and (q-1)^(t-1) for even d, and the
// nested-floor packing bound applies at that L. Requires 1 <= w <= n.
BoundValue symbol_packing_upper(int n, int d, int w, int q);

// Number of weight-w words within Hamming distance r of a fixed weight-w
// word, independent of the center. Exact count over alphabet q. Requires
// 0 <= w <= n, q >= 2, r >= 0.
long long sphere_size(int n, int w, int q, int r);

// Covering argument: a maximal code's radius-(d-1) spheres cover all
// weight-w words, so A >= ceil(C(n,w) (q-1)^w / sphere_size(n,w,q,d-1)).
BoundValue gv_lower(int n, int d, int w, int q);

// Expected-size estimate for the randomized lift: a t-(n, w, lambda)
// packing taken at its counting size lambda C(n,t) / C(w,t) loses at most
// lambda (lambda-1) C(t,f) / (q-1)^f words per t-set to conflict deletion
// (f = floor((2w-d+1)/2)). The counting size overshoots real packings at
// finite n, so the value carries rigorous = false and never feeds best
// bounds. Requires 2 <= d <= 2w, lambda >= 1, w <= n.
BoundValue prob_lower(int n, int d, int w, int q, long long lambda);

// The value maximum distance-4 weight-3 code sizes converge to,
// floor((q-1) n^2 / 6); an equivalence in n, not a finite-n bound
// (rigorous = false).
BoundValue asymptotic_n43(int n, int q);

// Asymptotic growth envelope for distance w+1 with w even and q in {3, 4}:
// lower (q-1) V, upper (q-1)^(w/2) V, with V = (w/2)!/w! * n^(w/2) floored.
// Both carry rigorous = false.
std::pair<BoundValue, BoundValue> asymptotic_envelope(int n, int w, int q);

// Closed-form exact sizes where the theory settles A_q(n, d, w) outright:
// degenerate parameter ranges, full-distance codes, all distance-3 weight-2
// sizes, the distance-4 weight-3 residue families (with their q = 2 and
// q = 3 collapses; the open sandwich alphabets return nullopt), projective
// and affine geometry values at distance 4, and the length-13 distance-6
// weight-4 ladder.
std::optional<BoundValue> exact_value(int n, int d, int w, int q);

// Best upper bound this library can certify: the minimum over the closed
// forms above and the full unwind of both shortening recursions, memoized
// across calls and safe for concurrent use. Requires n >= 0, w >= 0,
// d >= 1, 2 <= q <= 256.
long long a_upper(int n, int d, int w, int q);

struct BoundReport {
    CodeParams params;
    std::vector<BoundValue> values;
    long long best_upper = 0;  // min over rigorous uppers and exacts
    long long best_lower = 0;  // max over rigorous lowers and exacts
    std::optional<long long> exact;
};

// Every applicable bound for the parameter set, aggregated. Constructions
// (and the seed/budget knobs) only run when with_constructions is set; each
// verified witness contributes a rigorous lower bound labelled by its
// provenance. Throws ValidationError if rigorous bounds ever cross, since
// that can only mean a defect in the formulas.
BoundReport bound_report(int n, int d, int w, int q,
                         bool with_constructions = false,
                         std::uint64_t seed = 0,
                         std::uint64_t budget = 1'000'000);

// Stable JSON rendering: params, values (in ledger order), best_upper,
// best_lower, exact (null when open).
std::string report_json(const BoundReport& r);

}  // namespace cwc
