#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "params.hpp"
#include "partition.hpp"
#include "tableau.hpp"
#include "util.hpp"

namespace tev {

// Ambient Grassmannian Gr(k, N) with its k x (N-k) partition box.  N == k is
// the degenerate point (empty box), reached at d == r.
struct GrassmannianCtx {
    int k;
    int N;

    GrassmannianCtx(int k_, int N_) : k(k_), N(N_) {
        if (k < 2 || N < k)
            throw std::invalid_argument("GrassmannianCtx requires k >= 2 and N >= k");
    }
    static GrassmannianCtx from_params(const Params& p) { return {p.r + 1, p.d + 1}; }

    int box_cols() const { return N - k; }
    Partition top_class() const { return Partition(std::vector<int>(k, box_cols())); }
};

// Finitely supported nonnegative integer combination of Schubert classes;
// partitions outside the box are never stored, zero coefficients are dropped.
class SchubertClass {
public:
    SchubertClass() = default;

    static SchubertClass single(const Partition& p) {
        SchubertClass c;
        c.terms_[p] = 1;
        return c;
    }

    void add(const Partition& p, std::uint64_t coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(p, 0);
        it->second = checked_add(it->second, coeff);
    }

    std::uint64_t coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<Partition, std::uint64_t>& terms() const& { return terms_; }
    const std::map<Partition, std::uint64_t>& terms() const&& = delete;  // keep the class alive
    friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

private:
    std::map<Partition, std::uint64_t> terms_;
};

namespace detail {

// All partitions obtained from lam by adding one box to each of m distinct
// rows, staying inside the box.  Rows are chosen in increasing order, so the
// partition property can be enforced as boxes are added.
template <typename Emit>
void pieri_successors_rec(std::vector<int>& parts, int m, int row, const GrassmannianCtx& ctx,
                          Emit&& emit) {
    if (m == 0) {
        emit(Partition(parts));
        return;
    }
    for (int i = row; i <= ctx.k - m; ++i) {
        const int cap = i == 0 ? ctx.box_cols() : parts[i - 1];
        if (parts[i] + 1 > cap) continue;
        ++parts[i];
        pieri_successors_rec(parts, m - 1, i + 1, ctx, emit);
        --parts[i];
    }
}

}  // namespace detail

// Multiplication by sigma_{1^m}: each term gains m boxes, at most one per
// row; terms leaving the box are dropped (ring truncation).
inline SchubertClass pieri_e(const SchubertClass& c, int m, const GrassmannianCtx& ctx) {
    if (m < 1 || m > ctx.k)
        throw std::invalid_argument("pieri_e: m must lie in [1, k]");
    SchubertClass out;
    for (const auto& [lam, coeff] : c.terms()) {
        std::vector<int> parts(ctx.k);
        for (int i = 0; i < ctx.k; ++i) parts[i] = lam.part(i);
        detail::pieri_successors_rec(parts, m, 0, ctx,
                                     [&](const Partition& mu) { out.add(mu, coeff); });
    }
    return out;
}

// Coefficient of the top class in sigma_lam * sigma_{1^r}^g on Gr(r+1, d+1);
// zero unless |lam| + rg matches the box size.
inline std::uint64_t intersect_with_power(const Partition& lam, int g,
                                          const GrassmannianCtx& ctx) {
    if (g < 0) throw std::invalid_argument("intersect_with_power: g must be nonnegative");
    if (!lam.fits_in_box(ctx.k, ctx.box_cols()))
        throw std::invalid_argument("intersect_with_power: partition outside the box");
    SchubertClass c = SchubertClass::single(lam);
    for (int step = 0; step < g; ++step) c = pieri_e(c, ctx.k - 1, ctx);
    return c.coeff(ctx.top_class());
}

// Number of semistandard fillings of lam over {1, ..., r+1} avoiding every
// (i,i+1)-strip of length n-r-1.
inline std::uint64_t gamma(const Partition& lam, const Params& p) {
    if (!lam.fits_in_box(p.r + 1, p.strip_bound()))
        throw std::invalid_argument("gamma: shape outside the (n-r-1)^(r+1) box");
    std::uint64_t count = 0;
    const bool need_strips = lam.width() == p.strip_bound();
    for_each_ssyt(lam, p.r + 1, [&](const Tableau& t) {
        if (need_strips)
            for (int i = 1; i <= p.r; ++i)
                if (max_ii1_strip(t, i) >= p.strip_bound()) return true;
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

// Intersection-formula count: sum over partitions of size r(n-r-2) inside
// the (n-r-1)^(r+1) box (and inside the Grassmannian box) of
// gamma(lam) * coefficient of the top class in sigma_lam * sigma_{1^r}^g.
inline std::uint64_t tev_schubert(const Params& p) {
    if (p.n == p.r + 1) return 0;
    const GrassmannianCtx ctx = GrassmannianCtx::from_params(p);
    std::uint64_t total = 0;
    const int maxw = std::min(p.strip_bound(), ctx.box_cols());
    for_each_partition(p.blue_cells(), p.r + 1, maxw, [&](const Partition& lam) {
        const std::uint64_t gam = gamma(lam, p);
        if (gam)
            total = checked_add(total, checked_mul(gam, intersect_with_power(lam, p.g, ctx)));
        return true;
    });
    return total;
}

}  // namespace tev
