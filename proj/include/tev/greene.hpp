#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace tev {

enum class SubseqMode { nondecreasing, decreasing };

// Exact Greene invariant I_k (nondecreasing) or D_k (strictly decreasing) by
// exhaustive search over families of k disjoint subsequences.  Test oracle:
// guarded to words of length <= 12.
inline int greene_oracle(const Word& w, int k, SubseqMode mode) {
    const int n = w.length();
    if (n > 12)
        throw std::invalid_argument("greene_oracle is limited to words of length <= 12");
    if (k < 0) throw std::invalid_argument("greene_oracle: k must be nonnegative");
    if (k == 0 || n == 0) return 0;

    const int full = (1 << n) - 1;
    std::vector<char> valid(full + 1, 0);
    for (int mask = 0; mask <= full; ++mask) {
        bool ok = true, first = true;
        int prev = 0;
        for (int j = 0; j < n && ok; ++j) {
            if (!(mask >> j & 1)) continue;
            const int v = w.letters[j];
            if (!first)
                ok = mode == SubseqMode::nondecreasing ? prev <= v : prev > v;
            prev = v;
            first = false;
        }
        valid[mask] = static_cast<char>(ok);
    }

    // layer[S] = best total size of j disjoint valid subsequences inside S
    const int layers = std::min(k, n);
    std::vector<std::int8_t> prev_layer(full + 1, 0), cur(full + 1, 0);
    for (int j = 1; j <= layers; ++j) {
        for (int s = 0; s <= full; ++s) {
            int best = prev_layer[s];
            for (int t = s; t; t = (t - 1) & s)
                if (valid[t])
                    best = std::max(best, __builtin_popcount(static_cast<unsigned>(t)) +
                                              prev_layer[s & ~t]);
            cur[s] = static_cast<std::int8_t>(best);
        }
        std::swap(prev_layer, cur);
    }
    return prev_layer[full];
}

}  // namespace tev
