#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "params.hpp"
#include "partition.hpp"
#include "rsk.hpp"
#include "util.hpp"
#include "word.hpp"

namespace tev {

// Outcome of testing one word against the three membership conditions.
struct ConditionReport {
    bool satisfies_i = false;    // >= g+r-d disjoint decreasing subsequences of length r+1
    bool satisfies_ii = false;   // no nondecreasing subsequence longer than d/r
    bool satisfies_iii = false;  // no (i,i+1)-subsequence of length d/r
    Partition shape;             // insertion shape of the word
    std::vector<int> ii1_lengths;      // longest (i,i+1)-subsequence for i = 1..r
    bool r1_implications_hold = true;  // for r == 1: (iii) => (ii) and (i) => both
    bool passes() const { return satisfies_i && satisfies_ii && satisfies_iii; }
};

// Condition checker with reusable insertion buffers, one instance per thread.
class WordChecker {
public:
    explicit WordChecker(const Params& p) : p_(p), rows_(p.r + 2), lens_(p.r + 2, 0) {
        for (auto& row : rows_) row.assign(std::max(p.g, 1), 0);
    }

    const Params& params() const { return p_; }

    // Letters must already lie in {1, ..., r+1} and have length g.
    bool passes_letters(const std::vector<int>& letters) {
        insert_all(letters);
        if (nrows_ > 0 && lens_[0] > p_.dr()) return false;  // (ii)
        const int need = p_.g + p_.r - p_.d;
        if (need > 0 && (nrows_ <= p_.r || lens_[p_.r] < need)) return false;  // (i)
        for (int i = 1; i <= p_.r; ++i)
            if (ii1_split_max(letters, i) >= p_.dr()) return false;  // (iii)
        return true;
    }

    bool passes(const Word& w) {
        validate(w);
        return passes_letters(w.letters);
    }

    ConditionReport report(const Word& w) {
        validate(w);
        insert_all(w.letters);
        ConditionReport rep;
        std::vector<int> parts(lens_.begin(), lens_.begin() + nrows_);
        rep.shape = Partition(std::move(parts));
        rep.satisfies_ii = rep.shape.width() <= p_.dr();
        rep.satisfies_i = rep.shape.part(p_.r) >= p_.g + p_.r - p_.d;
        rep.ii1_lengths.resize(p_.r);
        int longest = 0;
        for (int i = 1; i <= p_.r; ++i) {
            rep.ii1_lengths[i - 1] = ii1_split_max(w.letters, i);
            longest = std::max(longest, rep.ii1_lengths[i - 1]);
        }
        rep.satisfies_iii = longest < p_.dr();
        if (p_.r == 1)
            rep.r1_implications_hold =
                (!rep.satisfies_iii || rep.satisfies_ii) &&
                (!rep.satisfies_i || (rep.satisfies_ii && rep.satisfies_iii));
        return rep;
    }

private:
    void validate(const Word& w) const {
        if (w.length() != p_.g)
            throw std::invalid_argument("check_word: word length must equal g");
        for (int v : w.letters)
            if (v < 1 || v > p_.r + 1)
                throw std::invalid_argument("check_word: letter outside {1, ..., r+1}");
    }

    void insert_all(const std::vector<int>& letters) {
        nrows_ = 0;
        std::fill(lens_.begin(), lens_.end(), 0);
        for (int x : letters) {
            for (int k = 0;; ++k) {
                auto& row = rows_[k];
                auto begin = row.begin();
                auto it = std::upper_bound(begin, begin + lens_[k], x);
                if (it == begin + lens_[k]) {
                    row[lens_[k]++] = x;
                    nrows_ = std::max(nrows_, k + 1);
                    break;
                }
                std::swap(*it, x);
            }
        }
    }

    static int ii1_split_max(const std::vector<int>& letters, int i) {
        int next_remaining = 0;
        for (int v : letters)
            if (v == i + 1) ++next_remaining;
        int best = next_remaining, ones = 0;
        for (int v : letters) {
            if (v == i) ++ones;
            else if (v == i + 1) --next_remaining;
            best = std::max(best, ones + next_remaining);
        }
        return best;
    }

    Params p_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> lens_;
    int nrows_ = 0;
};

inline ConditionReport check_word(const Word& w, const Params& p) {
    return WordChecker(p).report(w);
}

namespace detail {

// Lexicographic odometer over letters in [1, alph]; positions before `fixed`
// stay untouched.
inline bool next_word(std::vector<int>& letters, int alph, int fixed) {
    for (int j = static_cast<int>(letters.size()) - 1; j >= fixed; --j) {
        if (letters[j] < alph) {
            ++letters[j];
            std::fill(letters.begin() + j + 1, letters.end(), 1);
            return true;
        }
    }
    return false;
}

inline std::uint64_t checked_total_words(const Params& p, std::uint64_t bound) {
    const std::uint64_t total =
        pow_capped(static_cast<std::uint64_t>(p.r) + 1, static_cast<unsigned>(p.g), bound);
    if (total > bound)
        throw work_bound_exceeded("(r+1)^g exceeds the configured work bound");
    return total;
}

}  // namespace detail

// Number of words passing all three conditions, streamed in lexicographic
// order over all (r+1)^g words.  Refuses when (r+1)^g exceeds the work bound.
// With several threads the word space is split into fixed-prefix blocks whose
// counts add, so the result is schedule-independent.
inline std::uint64_t tev_words(const Params& p, const ExecPolicy& policy = {}) {
    const std::uint64_t total = detail::checked_total_words(p, policy.work_bound);
    if (p.g == 0) {
        WordChecker c(p);
        return c.passes(Word{}) ? 1 : 0;
    }
    const int alph = p.r + 1;
    unsigned threads =
        policy.threads ? policy.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || total < 4096) {
        WordChecker c(p);
        std::vector<int> letters(p.g, 1);
        std::uint64_t count = 0;
        do {
            if (c.passes_letters(letters)) ++count;
        } while (detail::next_word(letters, alph, 0));
        return count;
    }

    int prefix_len = 1;
    std::uint64_t blocks = alph;
    while (blocks < static_cast<std::uint64_t>(threads) * 4 && prefix_len < p.g) {
        blocks *= alph;
        ++prefix_len;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            WordChecker c(p);
            std::vector<int> letters(p.g, 1);
            std::uint64_t mine = 0;
            for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
                std::uint64_t idx = b;
                for (int j = prefix_len - 1; j >= 0; --j) {
                    letters[j] = 1 + static_cast<int>(idx % alph);
                    idx /= alph;
                }
                std::fill(letters.begin() + prefix_len, letters.end(), 1);
                do {
                    if (c.passes_letters(letters)) ++mine;
                } while (detail::next_word(letters, alph, prefix_len));
            }
            partial[t] = mine;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t count = 0;
    for (std::uint64_t part : partial) count = checked_add(count, part);
    return count;
}

// Passing words in lexicographic order, truncated after `limit` yields.
template <typename Visit>
bool for_each_passing_word(const Params& p, std::uint64_t limit, Visit&& visit,
                           const ExecPolicy& policy = {}) {
    detail::checked_total_words(p, policy.work_bound);
    if (limit == 0) return true;
    WordChecker c(p);
    Word w;
    w.letters.assign(p.g, 1);
    std::uint64_t yielded = 0;
    if (p.g == 0) {
        if (c.passes_letters(w.letters) && !visit(w)) return false;
        return true;
    }
    do {
        if (!c.passes_letters(w.letters)) continue;
        if (!visit(w)) return false;
        if (++yielded == limit) break;
    } while (detail::next_word(w.letters, p.r + 1, 0));
    return true;
}

inline std::vector<Word> list_words(const Params& p, std::uint64_t limit = UINT64_MAX,
                                    const ExecPolicy& policy = {}) {
    std::vector<Word> out;
    for_each_passing_word(
        p, limit,
        [&](const Word& w) {
            out.push_back(w);
            return true;
        },
        policy);
    return out;
}

}  // namespace tev
