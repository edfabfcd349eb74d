#include "cwc/words.hpp"

#include <algorithm>

#include "cwc/kernels.hpp"

namespace cwc {

std::size_t weight(const Word& u) {
    std::size_t w = 0;
    for (auto s : u)
        w += s != 0;
    return w;
}

std::vector<int> support(const Word& u) {
    std::vector<int> positions;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0)
            positions.push_back(static_cast<int>(i));
    return positions;
}

std::size_t hamming_distance(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw PreconditionError("hamming_distance: words have different lengths");
    return kernels::hamming_distance(u.data(), v.data(), u.size());
}

std::size_t hamming_distance_sparse(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw PreconditionError("hamming_distance_sparse: words have different lengths");
    std::size_t dist = 0;
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
        while (i < u.size() && u[i] == 0)
            ++i;
        while (j < v.size() && v[j] == 0)
            ++j;
        if (i < u.size() && (j >= v.size() || i < j)) {
            ++dist;
            ++i;
        } else if (j < v.size() && (i >= u.size() || j < i)) {
            ++dist;
            ++j;
        } else if (i < u.size()) {
            dist += u[i] != v[j];
            ++i;
            ++j;
        }
    }
    return dist;
}

VerificationReport verify_code(const Code& c) {
    VerificationReport report;
    const auto n = static_cast<std::size_t>(c.params.n);

    for (std::size_t i = 0; i < c.words.size(); ++i) {
        const Word& u = c.words[i];
        if (u.size() != n) {
            report.structure_violations.push_back({i, "word length differs from n"});
            continue;
        }
        bool alphabet_ok = true;
        for (auto s : u) {
            if (static_cast<int>(s) >= c.params.q) {
                report.structure_violations.push_back({i, "symbol outside alphabet"});
                alphabet_ok = false;
                break;
            }
        }
        if (alphabet_ok && weight(u) != static_cast<std::size_t>(c.params.w))
            report.weight_violations.push_back(i);
    }

    // Distances are only meaningful between words of the right length.
    std::size_t min_dist = 0;
    bool have_pair = false;
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        if (c.words[i].size() != n)
            continue;
        for (std::size_t j = i + 1; j < c.words.size(); ++j) {
            if (c.words[j].size() != n)
                continue;
            std::size_t dist =
                kernels::hamming_distance(c.words[i].data(), c.words[j].data(), n);
            if (!have_pair || dist < min_dist) {
                min_dist = dist;
                have_pair = true;
            }
            if (dist < static_cast<std::size_t>(c.params.d))
                report.distance_violations.push_back({i, j, dist});
        }
    }
    if (have_pair)
        report.actual_min_distance = min_dist;

    report.valid = report.weight_violations.empty() && report.distance_violations.empty() &&
                   report.structure_violations.empty();
    return report;
}

void canonicalize(Code& c) {
    std::sort(c.words.begin(), c.words.end());
    c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
}

}  // namespace cwc
