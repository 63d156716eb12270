#pragma once

#include <string>

#include "util.hpp"

namespace tev {

// Parameter triple (g, r, d) together with the derived point count
// n = (r+1)/r * d - g + 1.  Valid parameters satisfy r >= 1, g >= 0,
// d >= r, r | d and n >= r+1.  The boundary n == r+1 is a valid input
// for which every count is 0.
struct Params {
    int g = 0;
    int r = 1;
    int d = 1;
    int n = 0;

    static Params make(int g, int r, int d);

    int rows() const { return r + 1; }  // grid height
    int cols() const { return d - r; }  // grid width
    int blue_cells() const { return (d - r) * (r + 1) - r * g; }  // = r(n-r-2)
    int red_cells() const { return r * g; }
    // Forbidden (i,i+1)-strip length in the blue tableau, also its max width.
    int strip_bound() const { return n - r - 1; }
    // Forbidden nondecreasing/(i,i+1)-subsequence length in words.
    int dr() const { return d / r; }

    friend bool operator==(const Params&, const Params&) = default;
};

inline Params Params::make(int g, int r, int d) {
    if (r < 1) throw invalid_params("r must be at least 1");
    if (g < 0) throw invalid_params("g must be nonnegative");
    if (d < r) throw invalid_params("d must be at least r");
    if (d % r != 0) throw invalid_params("r must divide d");
    const int n = (d / r) * (r + 1) - g + 1;
    if (n < r + 1)
        throw invalid_params("n = (r+1)d/r - g + 1 = " + std::to_string(n) +
                             " is below the minimum r + 1 = " + std::to_string(r + 1));
    Params p;
    p.g = g;
    p.r = r;
    p.d = d;
    p.n = n;
    return p;
}

}  // namespace tev
