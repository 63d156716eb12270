#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "tableau.hpp"
#include "word.hpp"

namespace tev {

struct TableauPair {
    Tableau p;  // insertion tableau (semistandard)
    Tableau q;  // recording tableau (standard)
    auto operator<=>(const TableauPair&) const = default;
};

namespace detail {

// Schensted row insertion: bump the leftmost entry strictly greater than x.
// Returns the row index where a new cell appeared.
inline int row_insert(std::vector<std::vector<int>>& rows, int x) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        auto it = std::upper_bound(rows[k].begin(), rows[k].end(), x);
        if (it == rows[k].end()) {
            rows[k].push_back(x);
            return static_cast<int>(k);
        }
        std::swap(*it, x);
    }
    rows.push_back({x});
    return static_cast<int>(rows.size()) - 1;
}

}  // namespace detail

inline TableauPair rsk(const Word& w) {
    std::vector<std::vector<int>> p, q;
    for (int t = 0; t < w.length(); ++t) {
        const int x = w.letters[t];
        if (x < 1) throw std::invalid_argument("word letters must be positive");
        const int row = detail::row_insert(p, x);
        if (row == static_cast<int>(q.size())) q.push_back({});
        q[row].push_back(t + 1);
    }
    return {Tableau{std::move(p)}, Tableau{std::move(q)}};
}

// Shape of rsk(w) without building the recording tableau.
inline Partition rsk_shape(const Word& w) {
    std::vector<std::vector<int>> p;
    for (int x : w.letters) {
        if (x < 1) throw std::invalid_argument("word letters must be positive");
        detail::row_insert(p, x);
    }
    std::vector<int> lens;
    lens.reserve(p.size());
    for (const auto& row : p) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
}

// Inverse Schensted: the pair must be a same-shape (SSYT, SYT) pair.
inline Word rsk_inverse(const TableauPair& pair) {
    if (shape(pair.p) != shape(pair.q))
        throw std::invalid_argument("rsk_inverse: P and Q have different shapes");
    if (!validate_tableau(pair.p, TabMode::ssyt))
        throw std::invalid_argument("rsk_inverse: P is not semistandard");
    if (!validate_tableau(pair.q, TabMode::syt))
        throw std::invalid_argument("rsk_inverse: Q is not standard");

    const int n = pair.p.cell_count();
    std::vector<int> row_of(n + 1, -1);
    for (int k = 0; k < pair.q.height(); ++k)
        for (int v : pair.q.rows[k]) row_of[v] = k;

    auto rows = pair.p.rows;
    Word w;
    w.letters.assign(n, 0);
    for (int t = n; t >= 1; --t) {
        const int k = row_of[t];
        int v = rows[k].back();
        rows[k].pop_back();
        for (int up = k - 1; up >= 0; --up) {
            auto it = std::lower_bound(rows[up].begin(), rows[up].end(), v);
            if (it == rows[up].begin())
                throw std::invalid_argument("rsk_inverse: pair is not in the image of rsk");
            --it;  // rightmost entry strictly below v
            std::swap(*it, v);
        }
        w.letters[t - 1] = v;
    }
    return w;
}

// All words reachable by one elementary Knuth transformation
// (acb -> cab for a <= b < c, bac -> bca for a < b <= c, or an inverse).
inline std::set<Word> knuth_neighbors(const Word& w) {
    std::set<Word> out;
    const auto& x = w.letters;
    for (std::size_t j = 0; j + 2 < x.size(); ++j) {
        const int a = x[j], b = x[j + 1], c = x[j + 2];
        if ((a <= c && c < b) || (b <= c && c < a)) {  // acb <-> cab
            Word v = w;
            std::swap(v.letters[j], v.letters[j + 1]);
            out.insert(std::move(v));
        }
        if ((b < a && a <= c) || (c < a && a <= b)) {  // bac <-> bca
            Word v = w;
            std::swap(v.letters[j + 1], v.letters[j + 2]);
            out.insert(std::move(v));
        }
    }
    return out;
}

// Longest nondecreasing subsequence using only `letter` and `letter`+1:
// maximize (count of `letter` in a prefix) + (count of `letter`+1 in the
// complementary suffix) over all split points.
inline int max_ii1_subseq(const Word& w, int letter) {
    if (letter < 1) throw std::invalid_argument("subsequence letter must be at least 1");
    int next_remaining = 0;
    for (int v : w.letters)
        if (v == letter + 1) ++next_remaining;
    int best = next_remaining;
    int ones = 0;
    for (int v : w.letters) {
        if (v == letter) ++ones;
        else if (v == letter + 1) --next_remaining;
        best = std::max(best, ones + next_remaining);
    }
    return best;
}

}  // namespace tev
