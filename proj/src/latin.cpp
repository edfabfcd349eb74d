#include "cwc/latin.hpp"

#include <algorithm>
#include <string>

namespace cwc {

namespace {

// Kuhn augmenting path: try to match column `col` to some free symbol.
bool augment(int col, const std::vector<std::vector<int>>& options,
             std::vector<int>& symbol_owner, std::vector<char>& visited) {
    for (int sym : options[col]) {
        if (visited[sym])
            continue;
        visited[sym] = 1;
        if (symbol_owner[sym] < 0 ||
            augment(symbol_owner[sym], options, symbol_owner, visited)) {
            symbol_owner[sym] = col;
            return true;
        }
    }
    return false;
}

}  // namespace

void validate_latin(const LatinSquare& L) {
    const int n = L.side;
    if (n <= 0 || static_cast<int>(L.cells.size()) != n)
        throw ValidationError("latin: wrong row count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(L.cells[i].size()) != n)
            throw ValidationError("latin: wrong row length");
        std::vector<char> seen(n, 0);
        for (int v : L.cells[i]) {
            if (v < 0 || v >= n || seen[v])
                throw ValidationError("latin: row " + std::to_string(i) +
                                      " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
            const int v = L.cells[i][j];
            if (seen[v])
                throw ValidationError("latin: column " + std::to_string(j) +
                                      " repeats a symbol");
            seen[v] = 1;
        }
    }
    const int k = L.subsquare_side;
    if (k < 0 || k > n)
        throw ValidationError("latin: bad subsquare side");
    for (int i = 0; i < k; ++i) {
        std::vector<char> seen(k, 0);
        for (int j = 0; j < k; ++j) {
            const int v = L.cells[i][j];
            if (v >= k || seen[v])
                throw ValidationError("latin: marked corner is not a subsquare");
            seen[v] = 1;
        }
    }
}

LatinSquare latin_square_subsquare(int n, int k) {
    if (n <= 0 || k < 0 || 2 * k > n)
        throw PreconditionError("latin_square_subsquare: requires 0 <= k <= n/2");

    LatinSquare L;
    L.side = n;
    L.subsquare_side = k;
    L.cells.assign(n, std::vector<int>(n, -1));

    // First k rows: cyclic subsquare on symbols 0..k-1, cyclic band on
    // symbols k..n-1. Distinct down each column because k <= n - k.
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            L.cells[i][j] = (i + j) % k;
        for (int j = k; j < n; ++j)
            L.cells[i][j] = k + (i + j - k) % (n - k);
    }

    // Remaining rows one at a time; a Latin rectangle always extends, so the
    // matching below never fails on consistent input.
    std::vector<std::vector<char>> used_in_column(n, std::vector<char>(n, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            used_in_column[j][L.cells[i][j]] = 1;
    for (int i = k; i < n; ++i) {
        std::vector<std::vector<int>> options(n);
        for (int j = 0; j < n; ++j)
            for (int sym = 0; sym < n; ++sym)
                if (!used_in_column[j][sym])
                    options[j].push_back(sym);
        std::vector<int> symbol_owner(n, -1);
        for (int j = 0; j < n; ++j) {
            std::vector<char> visited(n, 0);
            if (!augment(j, options, symbol_owner, visited))
                throw Error("latin_square_subsquare: row completion failed");
        }
        for (int sym = 0; sym < n; ++sym) {
            L.cells[i][symbol_owner[sym]] = sym;
            used_in_column[symbol_owner[sym]][sym] = 1;
        }
    }
    validate_latin(L);
    return L;
}

LatinSquare permute_symbols(const LatinSquare& L, const std::vector<int>& sigma,
                            bool keep_subsquare) {
    if (static_cast<int>(sigma.size()) != L.side)
        throw PreconditionError("permute_symbols: permutation size mismatch");
    LatinSquare M = L;
    for (int i = 0; i < L.side; ++i)
        for (int j = 0; j < L.side; ++j)
            if (!keep_subsquare || i >= L.subsquare_side || j >= L.subsquare_side)
                M.cells[i][j] = sigma[L.cells[i][j]];
    validate_latin(M);
    return M;
}

std::pair<LatinSquare, LatinSquare> disjoint_latin_pair(int n) {
    if (n < 6)
        throw PreconditionError("disjoint_latin_pair: requires n >= 6");

    LatinSquare L = latin_square_subsquare(n, 3);

    // Fixed-point-free on both symbol classes: a 3-cycle on {0,1,2} and a
    // cyclic shift on {3,...,n-1}. Entries outside the kept corner all move.
    std::vector<int> sigma(n);
    for (int v = 0; v < 3; ++v)
        sigma[v] = (v + 1) % 3;
    for (int v = 3; v < n; ++v)
        sigma[v] = 3 + (v - 3 + 1) % (n - 3);
    LatinSquare M = permute_symbols(L, sigma, true);
    return {L, M};
}

}  // namespace cwc
