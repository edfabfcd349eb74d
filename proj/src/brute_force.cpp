#include "cwc/brute_force.hpp"

#include <algorithm>

#include "cwc/kernels.hpp"

namespace cwc {

namespace {

constexpr std::uint64_t kMaxVertices = 100000;

// Fixed-width bitset over the vertex range, one row per vertex.
struct BitRows {
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> bits;

    BitRows(std::size_t rows, std::size_t cols)
        : words_per_row((cols + 63) / 64), bits(rows * words_per_row, 0) {}

    std::uint64_t* row(std::size_t r) { return bits.data() + r * words_per_row; }
    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words_per_row; }

    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
    bool test(std::size_t r, std::size_t c) const {
        return (row(r)[c / 64] >> (c % 64)) & 1u;
    }
};

using BitVec = std::vector<std::uint64_t>;

void clear_bit(BitVec& v, std::size_t i) { v[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

bool any_bit(const BitVec& v) {
    for (auto word : v)
        if (word)
            return true;
    return false;
}

struct Searcher {
    const BitRows& adj;
    std::size_t row_words;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    // Coordinate-capacity pruning, sound when d >= 2w-1: two words sharing a
    // coordinate with equal symbols there are closer than 2w-1, so each
    // (coordinate, symbol) slot hosts at most one clique word; when d >= 2w
    // sharing a coordinate at all is already too close, so each coordinate
    // hosts at most one. Any clique then has at most (slot count)/w members.
    int capacity_mode = 0;  // 0 off, 1 distinct symbols per coordinate, 2 exclusive coordinate
    int word_weight = 0;
    std::vector<std::vector<std::pair<int, int>>> vertex_slots;  // (coordinate, symbol)
    std::vector<std::uint64_t> used_symbols;  // per coordinate, mode 1
    std::vector<int> used_coordinate;         // per coordinate, mode 2

    Searcher(const BitRows& a, std::uint64_t b)
        : adj(a), row_words(a.words_per_row), budget(b) {}

    std::size_t capacity_bound(const BitVec& candidates) {
        const std::size_t n = used_symbols.empty() ? used_coordinate.size() : used_symbols.size();
        static thread_local std::vector<std::uint64_t> masks;
        masks.assign(n, 0);
        for (std::size_t w = 0; w < row_words; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits) {
                auto v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                for (auto [coord, sym] : vertex_slots[v])
                    masks[coord] |= std::uint64_t{1} << sym;
            }
        }
        std::size_t slots = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (capacity_mode == 2)
                slots += used_coordinate[i] || masks[i];
            else
                slots += static_cast<std::size_t>(
                    __builtin_popcountll(masks[i] | used_symbols[i]));
        }
        return slots / static_cast<std::size_t>(word_weight);
    }

    void occupy(std::size_t v, int delta) {
        for (auto [coord, sym] : vertex_slots[v]) {
            if (capacity_mode == 2)
                used_coordinate[coord] += delta;
            else if (delta > 0)
                used_symbols[coord] |= std::uint64_t{1} << sym;
            else
                used_symbols[coord] &= ~(std::uint64_t{1} << sym);
        }
    }

    void expand(BitVec candidates) {
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }

        if (capacity_mode != 0 && capacity_bound(candidates) <= best.size())
            return;

        // Greedy coloring in index order; vertices come out grouped by color
        // class, so "color number" bounds any clique inside the remainder.
        std::vector<std::size_t> ordered;
        std::vector<std::size_t> bound;
        BitVec uncolored = candidates;
        std::size_t color = 0;
        while (any_bit(uncolored)) {
            ++color;
            BitVec avail = uncolored;
            while (true) {
                std::size_t v = 0;
                bool found = false;
                for (std::size_t w = 0; w < row_words; ++w) {
                    if (avail[w]) {
                        v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(avail[w]));
                        found = true;
                        break;
                    }
                }
                if (!found)
                    break;
                ordered.push_back(v);
                bound.push_back(color);
                clear_bit(uncolored, v);
                clear_bit(avail, v);
                const std::uint64_t* neighbors = adj.row(v);
                for (std::size_t w = 0; w < row_words; ++w)
                    avail[w] &= ~neighbors[w];
            }
        }

        for (std::size_t idx = ordered.size(); idx-- > 0;) {
            if (out_of_budget)
                return;
            if (current.size() + bound[idx] <= best.size())
                return;
            std::size_t v = ordered[idx];
            current.push_back(v);
            if (capacity_mode != 0)
                occupy(v, 1);
            if (current.size() > best.size())
                best = current;
            BitVec next(row_words);
            const std::uint64_t* neighbors = adj.row(v);
            bool nonempty = false;
            for (std::size_t w = 0; w < row_words; ++w) {
                next[w] = candidates[w] & neighbors[w];
                nonempty |= next[w] != 0;
            }
            if (nonempty)
                expand(std::move(next));
            current.pop_back();
            if (capacity_mode != 0)
                occupy(v, -1);
            clear_bit(candidates, v);
        }
    }
};

}  // namespace

BruteForceResult brute_force_max(int n, int d, int w, int q, std::uint64_t node_budget) {
    if (n <= 0 || w < 0 || w > n || d < 1 || q < 2 || q > kMaxAlphabet)
        throw PreconditionError("brute_force_max: bad parameters");

    std::uint64_t vertex_count = 1;
    for (int i = 0; i < w; ++i) {
        vertex_count = vertex_count * static_cast<std::uint64_t>(n - i) / (i + 1);
        if (vertex_count > kMaxVertices * 64)
            throw PreconditionError("brute_force_max: instance too large to enumerate");
    }
    for (int i = 0; i < w; ++i) {
        vertex_count *= static_cast<std::uint64_t>(q - 1);
        if (vertex_count > kMaxVertices)
            throw PreconditionError("brute_force_max: instance too large to enumerate");
    }

    // All weight-w words, in lexicographic order.
    std::vector<Word> vertices;
    vertices.reserve(vertex_count);
    std::vector<int> positions(w);
    for (int i = 0; i < w; ++i)
        positions[i] = i;
    auto emit_assignments = [&](const std::vector<int>& supp) {
        Word u(n, 0);
        std::vector<int> digits(w, 1);
        for (;;) {
            for (int i = 0; i < w; ++i)
                u[supp[i]] = static_cast<std::uint8_t>(digits[i]);
            vertices.push_back(u);
            int pos = w - 1;
            while (pos >= 0 && digits[pos] == q - 1) {
                digits[pos] = 1;
                --pos;
            }
            if (pos < 0)
                break;
            ++digits[pos];
        }
    };
    if (w == 0) {
        vertices.emplace_back(n, 0);
    } else {
        for (;;) {
            emit_assignments(positions);
            int pos = w - 1;
            while (pos >= 0 && positions[pos] == n - w + pos)
                --pos;
            if (pos < 0)
                break;
            ++positions[pos];
            for (int i = pos + 1; i < w; ++i)
                positions[i] = positions[i - 1] + 1;
        }
    }
    std::sort(vertices.begin(), vertices.end());

    const std::size_t count = vertices.size();
    // The adjacency matrix and the pairwise distance pass are quadratic; cap
    // them well below the enumeration guard.
    if (count > 20000)
        throw PreconditionError("brute_force_max: instance too large for the adjacency matrix");

    BitRows raw(count, count);
    std::vector<std::size_t> degree(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            auto dist = kernels::hamming_distance(vertices[i].data(), vertices[j].data(),
                                                  vertices[i].size());
            if (dist >= static_cast<std::size_t>(d)) {
                raw.set(i, j);
                raw.set(j, i);
                ++degree[i];
                ++degree[j];
            }
        }
    }

    // High-degree vertices first: they get the low color numbers, which
    // tightens the coloring bound considerably on dense instances.
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return degree[a] > degree[b];
    });

    BitRows adj(count, count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (raw.test(order[i], order[j]))
                adj.set(i, j);

    Searcher searcher(adj, node_budget);
    if (w >= 1 && q <= 64 && d >= 2 * w - 1) {
        searcher.capacity_mode = d >= 2 * w ? 2 : 1;
        searcher.word_weight = w;
        searcher.vertex_slots.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            const Word& u = vertices[order[i]];
            for (std::size_t pos = 0; pos < u.size(); ++pos)
                if (u[pos])
                    searcher.vertex_slots[i].emplace_back(static_cast<int>(pos), u[pos]);
        }
        if (searcher.capacity_mode == 2)
            searcher.used_coordinate.assign(n, 0);
        else
            searcher.used_symbols.assign(n, 0);
    }

    // Warm start: greedy cliques from a few offsets seed the size bound.
    for (std::size_t start = 0; start < count && start < 64; ++start) {
        std::vector<std::size_t> clique;
        BitVec candidates(adj.words_per_row, 0);
        for (std::size_t i = 0; i < count; ++i)
            candidates[i / 64] |= std::uint64_t{1} << (i % 64);
        std::size_t v = start;
        while (true) {
            clique.push_back(v);
            const std::uint64_t* neighbors = adj.row(v);
            bool found = false;
            for (std::size_t w2 = 0; w2 < adj.words_per_row; ++w2) {
                candidates[w2] &= neighbors[w2];
                if (!found && candidates[w2]) {
                    v = w2 * 64 + static_cast<std::size_t>(__builtin_ctzll(candidates[w2]));
                    found = true;
                }
            }
            if (!found)
                break;
        }
        if (clique.size() > searcher.best.size())
            searcher.best = clique;
    }

    BitVec all(adj.words_per_row, 0);
    for (std::size_t i = 0; i < count; ++i)
        all[i / 64] |= std::uint64_t{1} << (i % 64);
    searcher.expand(std::move(all));

    BruteForceResult result;
    result.completed = !searcher.out_of_budget;
    result.nodes_explored = searcher.nodes;
    result.witness.params = {n, d, w, q};
    result.witness.provenance = "brute_force";
    for (std::size_t v : searcher.best)
        result.witness.words.push_back(vertices[order[v]]);
    canonicalize(result.witness);
    return result;
}

}  // namespace cwc
