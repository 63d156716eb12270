#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "params.hpp"
#include "partition.hpp"
#include "rsk.hpp"
#include "tableau.hpp"
#include "util.hpp"

namespace tev {

// An L-tableau: an (r+1) x (d-r) grid split into a top-left blue SSYT over
// {1, ..., r+1} and a complementary bottom-right red filling in which each of
// 1, ..., g appears exactly r times.  The red part keeps all r+1 rows (empty
// ones included, top rows first) so complementation against the blue part
// stays positional.
struct LTableau {
    Params params;
    Tableau blue;
    Tableau red;
    friend bool operator==(const LTableau&, const LTableau&) = default;
};

// Ordering plus content: rows strictly increase right to left, right-aligned
// columns weakly decrease downward, and every value 1..g appears exactly r
// times.
inline bool is_valid_red(const Tableau& red, int g, int r) {
    if (red.height() > r + 1) return false;
    for (int k = 1; k < red.height(); ++k)
        if (red.row_length(k - 1) > red.row_length(k)) return false;
    if (!validate_tableau(red, TabMode::rotated_red)) return false;
    std::vector<int> cnt(g + 1, 0);
    for (const auto& row : red.rows)
        for (int v : row) {
            if (v > g) return false;
            cnt[v]++;
        }
    for (int v = 1; v <= g; ++v)
        if (cnt[v] != r) return false;
    return true;
}

// Definition-level validity of an L-tableau; with `constrained` the blue part
// must also sit in the leftmost n-r-1 columns and avoid (i,i+1)-strips of
// length n-r-1.  Grid-dimension mismatches against params are structural
// errors; invariant failures return false.
inline bool validate_L(const LTableau& L, bool constrained) {
    const Params& p = L.params;
    if (L.red.height() != p.rows())
        throw std::invalid_argument("validate_L: red part must have exactly r+1 rows");
    if (L.blue.height() > p.rows())
        throw std::invalid_argument("validate_L: blue part taller than the grid");
    for (int k = 0; k < p.rows(); ++k)
        if (L.blue.row_length(k) + L.red.row_length(k) != p.cols())
            throw std::invalid_argument("validate_L: row does not fill the grid");

    for (int k = 1; k < L.blue.height(); ++k)
        if (L.blue.row_length(k - 1) < L.blue.row_length(k)) return false;
    if (!validate_tableau(L.blue, TabMode::ssyt)) return false;
    if (L.blue.max_entry() > p.r + 1) return false;
    if (L.blue.cell_count() != p.blue_cells()) return false;
    if (!is_valid_red(L.red, p.g, p.r)) return false;

    if (constrained) {
        const Partition sh = shape(L.blue);
        if (sh.width() > p.strip_bound()) return false;
        if (sh.width() == p.strip_bound())
            for (int i = 1; i <= p.r; ++i)
                if (max_ii1_strip(L.blue, i) >= p.strip_bound()) return false;
    }
    return true;
}

namespace detail {

template <typename Visit>
bool red_rec(std::vector<std::vector<int>>& grid, const std::vector<int>& lens, int g, int r,
             std::vector<int>& used, int k, int j, Visit&& visit) {
    const int rows = static_cast<int>(lens.size());
    while (k < rows && lens[k] == 0) ++k;
    if (k == rows) return visit(Tableau{grid});
    int nk = k, nj = j + 1;
    if (nj == lens[k]) {
        nk = k + 1;
        nj = 0;
    }
    const int idx = lens[k] - 1 - j;  // display position, offset j from the right
    int lo = j > 0 ? grid[k][lens[k] - j] + 1 : 1;
    int hi = g - (lens[k] - 1 - j);  // leave room for the strictly larger cells to the left
    if (k > 0 && lens[k - 1] > j) hi = std::min(hi, grid[k - 1][lens[k - 1] - 1 - j]);
    for (int v = lo; v <= hi; ++v) {
        if (used[v] == r) continue;
        grid[k][idx] = v;
        ++used[v];
        const bool cont = red_rec(grid, lens, g, r, used, nk, nj, visit);
        --used[v];
        if (!cont) return false;
    }
    return true;
}

}  // namespace detail

// Every valid red filling of the given row lengths (top to bottom, exactly
// r+1 entries) with content (r^g).  Cells are filled top row first, rightmost
// first, smaller values first, so the stream is deterministic.
template <typename Visit>
bool for_each_red_filling(const std::vector<int>& lens, int g, int r, Visit&& visit) {
    if (static_cast<int>(lens.size()) != r + 1)
        throw std::invalid_argument("red filling needs exactly r+1 row lengths");
    long total = 0;
    for (int k = 0; k < r + 1; ++k) {
        if (lens[k] < 0 || (k > 0 && lens[k - 1] > lens[k]))
            throw std::invalid_argument("red row lengths must be nonnegative and nondecreasing");
        total += lens[k];
    }
    if (total != static_cast<long>(g) * r) return true;  // no fillings exist
    std::vector<std::vector<int>> grid(r + 1);
    for (int k = 0; k <= r; ++k) grid[k].assign(lens[k], 0);
    std::vector<int> used(g + 1, 0);
    return detail::red_rec(grid, lens, g, r, used, 0, 0, visit);
}

// Membership in the constrained blue family: correct size, entries <= r+1,
// width <= n-r-1, at least d-g-r full-height columns when d > g+r, and no
// (i,i+1)-strip of length n-r-1.
inline bool in_ssyt_C(const Tableau& b, const Params& p) {
    if (b.height() > p.r + 1) return false;
    for (int k = 1; k < b.height(); ++k)
        if (b.row_length(k - 1) < b.row_length(k)) return false;
    if (!validate_tableau(b, TabMode::ssyt)) return false;
    if (b.max_entry() > p.r + 1) return false;
    if (b.cell_count() != p.blue_cells()) return false;
    const Partition sh = shape(b);
    if (sh.width() > p.strip_bound()) return false;
    if (p.d > p.g + p.r && sh.part(p.r) < p.d - p.g - p.r) return false;
    if (sh.width() == p.strip_bound())
        for (int i = 1; i <= p.r; ++i)
            if (max_ii1_strip(b, i) >= p.strip_bound()) return false;
    return true;
}

// Membership in the width-adjusted family: size g, entries <= r+1, width
// <= d/r, at least g+r-d full-height columns when d < g+r, and no
// (i,i+1)-strip of length d/r.
inline bool in_ssyt_AC(const Tableau& t, const Params& p) {
    if (t.height() > p.r + 1) return false;
    for (int k = 1; k < t.height(); ++k)
        if (t.row_length(k - 1) < t.row_length(k)) return false;
    if (!validate_tableau(t, TabMode::ssyt)) return false;
    if (t.max_entry() > p.r + 1) return false;
    if (t.cell_count() != p.g) return false;
    const Partition sh = shape(t);
    if (sh.width() > p.dr()) return false;
    if (p.d < p.g + p.r && sh.part(p.r) < p.g + p.r - p.d) return false;
    if (sh.width() == p.dr())
        for (int i = 1; i <= p.r; ++i)
            if (max_ii1_strip(t, i) >= p.dr()) return false;
    return true;
}

namespace detail {

// Adds `shift` full-height columns on the left (shift > 0) or removes -shift
// of them (shift < 0); full columns hold 1..r+1 top to bottom.
inline Tableau shift_full_columns(const Tableau& t, int shift, int r) {
    if (shift == 0) return t;
    std::vector<std::vector<int>> rows;
    if (shift > 0) {
        rows.assign(r + 1, {});
        for (int k = 0; k <= r; ++k) {
            rows[k].assign(shift, k + 1);
            if (k < t.height())
                rows[k].insert(rows[k].end(), t.rows[k].begin(), t.rows[k].end());
        }
    } else {
        const int cut = -shift;
        rows = t.rows;
        for (auto& row : rows) row.erase(row.begin(), row.begin() + cut);
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
    }
    return Tableau{std::move(rows)};
}

}  // namespace detail

// Width adjustment: add g+r-d full-height columns on the left when d < g+r,
// remove d-g-r of them when d > g+r.  The result has exactly g cells.
inline Tableau psi(const Tableau& blue, const Params& p) {
    if (!in_ssyt_C(blue, p))
        throw std::invalid_argument("psi: input fails the constrained blue conditions");
    return detail::shift_full_columns(blue, p.g + p.r - p.d, p.r);
}

inline Tableau psi_inverse(const Tableau& adjusted, const Params& p) {
    if (!in_ssyt_AC(adjusted, p))
        throw std::invalid_argument("psi_inverse: input fails the adjusted conditions");
    return detail::shift_full_columns(adjusted, p.d - p.g - p.r, p.r);
}

// Purple tableau: for each value 1..g, append a cell to the unique row
// (labels 1..r+1, bottom row r+1) whose red part does not contain the value.
inline Tableau phi(const Tableau& red, int g, int r) {
    if (red.height() > r + 1)
        throw std::invalid_argument("phi: red tableau has more than r+1 rows");
    if (!is_valid_red(red, g, r))
        throw std::invalid_argument("phi: input is not a valid red tableau of content (r^g)");
    const int pad = r + 1 - red.height();
    std::vector<std::vector<char>> has(r + 1, std::vector<char>(g + 1, 0));
    for (int k = 0; k < red.height(); ++k)
        for (int v : red.rows[k]) has[pad + k][v] = 1;

    std::vector<std::vector<int>> out(r + 1);
    for (int v = 1; v <= g; ++v) {
        int missing = -1, cover = 0;
        for (int k = 0; k <= r; ++k) {
            if (has[k][v]) ++cover;
            else missing = k;
        }
        if (cover != r)
            throw std::invalid_argument("phi: value " + std::to_string(v) +
                                        " must appear in exactly r rows");
        out[missing].push_back(v);
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    Tableau result{std::move(out)};
    if (!validate_tableau(result, TabMode::syt))
        throw std::invalid_argument("phi: input red tableau is inconsistent");
    return result;
}

// Positional complement of a standard tableau in the (r+1) x g rectangle: red
// row k holds the values missing from row k of the standard tableau, in
// decreasing display order.
inline Tableau phi_inverse(const Tableau& syt, int g, int r) {
    if (syt.cell_count() != g)
        throw std::invalid_argument("phi_inverse: tableau size must equal g");
    if (syt.height() > r + 1)
        throw std::invalid_argument("phi_inverse: tableau height exceeds r+1");
    if (!validate_tableau(syt, TabMode::syt))
        throw std::invalid_argument("phi_inverse: input is not standard");
    std::vector<std::vector<char>> in_row(r + 1, std::vector<char>(g + 1, 0));
    for (int k = 0; k < syt.height(); ++k)
        for (int v : syt.rows[k]) in_row[k][v] = 1;
    std::vector<std::vector<int>> out(r + 1);
    for (int k = 0; k <= r; ++k)
        for (int v = g; v >= 1; --v)
            if (!in_row[k][v]) out[k].push_back(v);
    return Tableau{std::move(out)};
}

inline TableauPair L_to_pair(const LTableau& L) {
    TableauPair pair{psi(L.blue, L.params), phi(L.red, L.params.g, L.params.r)};
    if (shape(pair.p) != shape(pair.q))
        throw std::invalid_argument("L_to_pair: adjusted blue and purple shapes disagree");
    return pair;
}

inline LTableau pair_to_L(const TableauPair& pair, const Params& p) {
    LTableau L{p, psi_inverse(pair.p, p), phi_inverse(pair.q, p.g, p.r)};
    for (int k = 0; k <= p.r; ++k)
        if (L.blue.row_length(k) + L.red.row_length(k) != p.cols())
            throw std::invalid_argument("pair_to_L: parts do not fill the grid");
    return L;
}

inline Word L_to_word(const LTableau& L) { return rsk_inverse(L_to_pair(L)); }

// Streams the constrained family: blue shapes in ascending lexicographic
// order, blue fillings row-major lexicographic with the strip filter, red
// fillings innermost.  Visitor returns false to stop.
template <typename Visit>
bool for_each_L(const Params& p, Visit&& visit) {
    if (p.n == p.r + 1) return true;  // empty family
    const int maxw = std::min(p.strip_bound(), p.cols());
    return for_each_partition(p.blue_cells(), p.r + 1, maxw, [&](const Partition& bs) {
        if (p.cols() - bs.part(p.r) > p.g) return true;  // red rows would repeat a value
        std::vector<int> red_lens(p.r + 1);
        for (int k = 0; k <= p.r; ++k) red_lens[k] = p.cols() - bs.part(k);
        std::vector<Tableau> reds;
        for_each_red_filling(red_lens, p.g, p.r, [&](const Tableau& red) {
            reds.push_back(red);
            return true;
        });
        if (reds.empty()) return true;
        const bool need_strip_check = bs.width() == p.strip_bound();
        return for_each_ssyt(bs, p.r + 1, [&](const Tableau& blue) {
            if (need_strip_check)
                for (int i = 1; i <= p.r; ++i)
                    if (max_ii1_strip(blue, i) >= p.strip_bound()) return true;
            for (const Tableau& red : reds)
                if (!visit(LTableau{p, blue, red})) return false;
            return true;
        });
    });
}

inline std::uint64_t tev_ltab(const Params& p) {
    std::uint64_t count = 0;
    for_each_L(p, [&](const LTableau&) {
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

inline std::string to_string(const LTableau& L) {
    std::string s;
    for (int k = 0; k < L.params.rows(); ++k) {
        for (int j = 0; j < L.blue.row_length(k); ++j) {
            if (j) s += " ";
            s += std::to_string(L.blue.rows[k][j]);
        }
        s += " |";
        for (int j = 0; j < L.red.row_length(k); ++j) s += " " + std::to_string(L.red.rows[k][j]);
        s += "\n";
    }
    return s;
}

}  // namespace tev
