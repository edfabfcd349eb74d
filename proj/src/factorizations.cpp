#include "cwc/factorizations.hpp"

#include <algorithm>
#include <string>

namespace cwc {

namespace {

Edge make_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

}  // namespace

Factorization one_factorization(int n) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError("one_factorization: requires even n >= 2");

    // Circle method: vertex n-1 sits in the center, vertices 0..n-2 on a
    // circle. Round r pairs the center with r and folds the circle around it.
    Factorization f;
    f.vertex_count = n;
    const int m = n - 1;
    for (int r = 0; r < m; ++r) {
        std::vector<Edge> factor;
        factor.push_back(make_edge(n - 1, r));
        for (int i = 1; i <= (n - 2) / 2; ++i)
            factor.push_back(make_edge((r + i) % m, (r - i + m) % m));
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    validate_factorization(f);
    return f;
}

Factorization near_one_factorization(int n) {
    if (n < 3 || n % 2 == 0)
        throw PreconditionError("near_one_factorization: requires odd n >= 3");

    // Circle method on Z_n: the class r holds the edges {x, y} with
    // x + y = r (mod n) and isolates the vertex v with 2v = r (mod n).
    // The relabeling pi sends the class of r = 0 to {{0,1},{2,3},...} and
    // its isolated vertex 0 to n-1; composing with the class order below
    // makes factor i the one isolating vertex i.
    std::vector<int> pi(n);
    pi[0] = n - 1;
    for (int x = 1; x <= (n - 1) / 2; ++x)
        pi[x] = 2 * x - 2;
    for (int y = (n + 1) / 2; y <= n - 1; ++y)
        pi[y] = 2 * (n - y) - 1;

    Factorization f;
    f.vertex_count = n;
    f.factors.resize(n);
    for (int r = 0; r < n; ++r) {
        std::vector<Edge> factor;
        for (int x = 0; x < n; ++x) {
            const int y = (r - x % n + n) % n;
            if (x < y)
                factor.push_back(make_edge(pi[x], pi[y]));
        }
        std::sort(factor.begin(), factor.end());
        const int isolated_old = static_cast<int>((static_cast<long long>(r) * ((n + 1) / 2)) % n);
        f.factors[pi[isolated_old]] = std::move(factor);
    }
    validate_factorization(f);
    return f;
}

void validate_factorization(const Factorization& f) {
    const int n = f.vertex_count;
    if (n < 2)
        throw ValidationError("factorization: fewer than two vertices");
    const bool even = n % 2 == 0;
    const std::size_t expected_factors = even ? n - 1 : n;
    if (f.factors.size() != expected_factors)
        throw ValidationError("factorization: wrong factor count");

    std::vector<char> edge_seen(static_cast<std::size_t>(n) * n, 0);
    std::vector<char> isolated_once(n, 0);
    for (std::size_t fi = 0; fi < f.factors.size(); ++fi) {
        std::vector<char> covered(n, 0);
        for (const Edge& e : f.factors[fi]) {
            if (e[0] < 0 || e[1] >= n || e[0] >= e[1])
                throw ValidationError("factorization: malformed edge");
            for (int v : e) {
                if (covered[v])
                    throw ValidationError("factorization: vertex covered twice in factor " +
                                          std::to_string(fi));
                covered[v] = 1;
            }
            char& seen = edge_seen[static_cast<std::size_t>(e[0]) * n + e[1]];
            if (seen)
                throw ValidationError("factorization: edge repeated across factors");
            seen = 1;
        }
        const int missed = static_cast<int>(std::count(covered.begin(), covered.end(), 0));
        if (even && missed != 0)
            throw ValidationError("factorization: factor is not a perfect matching");
        if (!even) {
            if (missed != 1)
                throw ValidationError("factorization: near-factor must isolate one vertex");
            const int v = static_cast<int>(std::find(covered.begin(), covered.end(), 0) -
                                           covered.begin());
            if (isolated_once[v]++)
                throw ValidationError("factorization: vertex isolated twice");
        }
    }
    const auto edges_used = static_cast<long long>(std::count(edge_seen.begin(), edge_seen.end(), 1));
    if (edges_used != static_cast<long long>(n) * (n - 1) / 2)
        throw ValidationError("factorization: edges do not partition K_n");
}

}  // namespace cwc
