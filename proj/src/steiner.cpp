#include "cwc/steiner.hpp"

#include <string>

namespace cwc {

namespace {

// Bose: points Z_m x {0,1,2} with m = 2t+1, using the idempotent commutative
// quasigroup x*y = (x+y)(t+1) mod m, the halving map.
SetSystem bose(int n) {
    const int m = n / 3;
    const int half = (m + 1) / 2;
    auto point = [m](int x, int j) { return x + j * m; };

    SetSystem s;
    s.point_count = n;
    for (int x = 0; x < m; ++x)
        s.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int j = 0; j < 3; ++j)
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                const int z = static_cast<int>((static_cast<long long>(x + y) * half) % m);
                s.blocks.push_back({point(x, j), point(y, j), point(z, (j + 1) % 3)});
            }
    return s;
}

// Skolem: points (Z_2t x {0,1,2}) + one extra, using the half-idempotent
// commutative quasigroup h((x+y) mod 2t) with h(2k) = k, h(2k+1) = t+k.
SetSystem skolem(int n) {
    const int t = n / 6;
    const int m = 2 * t;
    const int inf = 3 * m;
    auto point = [m](int x, int j) { return x + j * m; };
    auto star = [m, t](int x, int y) {
        const int v = (x + y) % m;
        return v % 2 == 0 ? v / 2 : t + (v - 1) / 2;
    };

    SetSystem s;
    s.point_count = n;
    for (int x = 0; x < t; ++x)
        s.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int j = 0; j < 3; ++j)
        for (int x = 0; x < t; ++x)
            s.blocks.push_back({inf, point(t + x, j), point(x, (j + 1) % 3)});
    for (int j = 0; j < 3; ++j)
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                s.blocks.push_back({point(x, j), point(y, j), point(star(x, y), (j + 1) % 3)});
    return s;
}

}  // namespace

SetSystem steiner_triple_system(int n) {
    if (n < 1 || (n % 6 != 1 && n % 6 != 3))
        throw PreconditionError("steiner_triple_system: requires n = 1 or 3 (mod 6)");

    SetSystem s;
    if (n == 1) {
        s.point_count = 1;
    } else if (n == 3) {
        s.point_count = 3;
        s.blocks.push_back({0, 1, 2});
    } else {
        s = n % 6 == 3 ? bose(n) : skolem(n);
    }
    canonicalize(s);
    validate_steiner(s);
    return s;
}

void validate_steiner(const SetSystem& s) {
    const int n = s.point_count;
    if (!uniform(s, 3))
        throw ValidationError("steiner: non-triple block");
    if (static_cast<long long>(s.blocks.size()) * 6 != static_cast<long long>(n) * (n - 1))
        throw ValidationError("steiner: wrong block count");

    std::vector<char> pair_seen(static_cast<std::size_t>(n) * n, 0);
    for (const auto& block : s.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                const int a = block[i];
                const int b = block[j];
                if (a < 0 || b >= n || a >= b)
                    throw ValidationError("steiner: malformed block");
                char& seen = pair_seen[static_cast<std::size_t>(a) * n + b];
                if (seen)
                    throw ValidationError("steiner: pair {" + std::to_string(a) + "," +
                                          std::to_string(b) + "} covered twice");
                seen = 1;
            }
    // Counting: n(n-1)/6 triples with no repeated pair cover all pairs.
}

}  // namespace cwc
