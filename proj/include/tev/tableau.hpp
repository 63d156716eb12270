#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "util.hpp"
#include "word.hpp"

namespace tev {

// Row-stored filling.  Semistandard and standard tableaux keep their rows
// top-left justified; the rotated-red convention keeps rows in display order
// aligned at the right edge (cell j of row k counted from the right).
struct Tableau {
    std::vector<std::vector<int>> rows;

    int height() const { return static_cast<int>(rows.size()); }
    int row_length(int i) const {
        return i >= 0 && i < height() ? static_cast<int>(rows[i].size()) : 0;
    }
    int cell_count() const {
        int c = 0;
        for (const auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }
    int max_entry() const {
        int m = 0;
        for (const auto& r : rows)
            for (int v : r) m = std::max(m, v);
        return m;
    }
    auto operator<=>(const Tableau&) const = default;
};

// Shape of a top-justified tableau.  Malformed row lengths (increasing, or an
// empty row above a nonempty one) are a structural error.
inline Partition shape(const Tableau& t) {
    std::vector<int> lens;
    lens.reserve(t.rows.size());
    for (const auto& r : t.rows) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
}

enum class TabMode { ssyt, syt, rotated_red };

// True iff the filling satisfies the mode's ordering invariants.  Structural
// malformation (row lengths incompatible with the mode's shape convention,
// nonpositive entries) raises std::invalid_argument instead of returning
// false.
inline bool validate_tableau(const Tableau& t, TabMode mode) {
    for (const auto& row : t.rows)
        for (int v : row)
            if (v < 1) throw std::invalid_argument("tableau entries must be positive");

    if (mode == TabMode::rotated_red) {
        for (int k = 1; k < t.height(); ++k)
            if (t.row_length(k - 1) > t.row_length(k))
                throw std::invalid_argument(
                    "rotated red rows must have nondecreasing lengths top to bottom");
        // strictly increasing right to left within each row
        for (const auto& row : t.rows)
            for (std::size_t j = 1; j < row.size(); ++j)
                if (row[j - 1] <= row[j]) return false;
        // weakly decreasing down right-aligned columns
        for (int k = 1; k < t.height(); ++k) {
            const auto& a = t.rows[k - 1];
            const auto& b = t.rows[k];
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[a.size() - 1 - j] < b[b.size() - 1 - j]) return false;
        }
        return true;
    }

    shape(t);  // structural: row lengths must form a partition
    for (const auto& row : t.rows)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] > row[j]) return false;
    for (int k = 1; k < t.height(); ++k)
        for (std::size_t j = 0; j < t.rows[k].size(); ++j)
            if (t.rows[k - 1][j] >= t.rows[k][j]) return false;

    if (mode == TabMode::syt) {
        const int n = t.cell_count();
        std::vector<bool> seen(n + 1, false);
        for (const auto& row : t.rows)
            for (int v : row) {
                if (v > n || seen[v]) return false;
                seen[v] = true;
            }
    }
    return true;
}

// Rows concatenated bottom to top.
inline Word reading_word(const Tableau& t) {
    Word w;
    w.letters.reserve(t.cell_count());
    for (int k = t.height() - 1; k >= 0; --k)
        w.letters.insert(w.letters.end(), t.rows[k].begin(), t.rows[k].end());
    return w;
}

// Length of the longest (i,i+1)-strip of a semistandard tableau: one box in
// each of the first L columns, boxes weakly descending going left, every box
// holding `letter` or `letter`+1 with all `letter`s in columns left of all
// (`letter`+1)s.  Column-by-column DP over (row, switched-to-i+1) states.
inline int max_ii1_strip(const Tableau& t, int letter) {
    if (letter < 1) throw std::invalid_argument("strip letter must be at least 1");
    const Partition sh = shape(t);
    const Partition colh = sh.conjugate();
    const int w = sh.width();
    const int h = sh.height();

    std::vector<char> prev0(h, 0), prev1(h, 0), cur0(h, 0), cur1(h, 0);
    std::vector<char> reach0(h + 1, 0), reach01(h + 1, 0);
    int best = 0;
    for (int c = 0; c < w; ++c) {
        reach0[h] = reach01[h] = 0;
        for (int rho = h - 1; rho >= 0; --rho) {
            reach0[rho] = static_cast<char>(reach0[rho + 1] | prev0[rho]);
            reach01[rho] = static_cast<char>(reach01[rho + 1] | prev0[rho] | prev1[rho]);
        }
        bool any = false;
        const int ch = colh.part(c);
        for (int rho = 0; rho < h; ++rho) {
            cur0[rho] = cur1[rho] = 0;
            if (rho >= ch) continue;
            const int v = t.rows[rho][c];
            if (v == letter && (c == 0 || reach0[rho])) cur0[rho] = 1;
            if (v == letter + 1 && (c == 0 || reach01[rho])) cur1[rho] = 1;
            any = any || cur0[rho] || cur1[rho];
        }
        if (!any) break;
        best = c + 1;
        std::swap(prev0, cur0);
        std::swap(prev1, cur1);
    }
    return best;
}

namespace detail {

template <typename Visit>
bool ssyt_rec(const Partition& sh, int max_entry, int row, int col,
              std::vector<std::vector<int>>& rows, Visit&& visit) {
    if (row == sh.height()) return visit(Tableau{rows});
    int nr = row;
    int nc = col + 1;
    if (nc == sh.part(row)) {
        nr = row + 1;
        nc = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, rows[row][col - 1]);
    if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        rows[row][col] = v;
        if (!ssyt_rec(sh, max_entry, nr, nc, rows, visit)) return false;
    }
    return true;
}

}  // namespace detail

// Every semistandard filling of the shape over {1, ..., max_entry}, streamed
// in row-major lexicographic order.  Visitor returns false to stop.
template <typename Visit>
bool for_each_ssyt(const Partition& sh, int max_entry, Visit&& visit) {
    if (sh.empty()) return visit(Tableau{});
    if (max_entry < sh.height()) return true;
    std::vector<std::vector<int>> rows(sh.height());
    for (int i = 0; i < sh.height(); ++i) rows[i].assign(sh.parts()[i], 0);
    return detail::ssyt_rec(sh, max_entry, 0, 0, rows, visit);
}

inline std::uint64_t count_ssyt(const Partition& sh, int max_entry) {
    std::uint64_t n = 0;
    for_each_ssyt(sh, max_entry, [&](const Tableau&) {
        n = checked_add(n, 1);
        return true;
    });
    return n;
}

inline std::string to_string(const Tableau& t) {
    std::string s;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(row[j]);
        }
        s += "\n";
    }
    return s;
}

}  // namespace tev
