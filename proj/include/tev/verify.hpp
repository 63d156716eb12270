#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "ltableau.hpp"
#include "util.hpp"
#include "word_filter.hpp"

namespace tev {

// Result of machine-checking the tableau-to-word bijection at one triple.
struct VerifyReport {
    bool ok = true;
    std::uint64_t elements = 0;    // constrained L-tableaux seen = image words
    std::uint64_t word_count = 0;  // independent count from the word filter
    std::string failure;           // empty when ok
};

// Streams every constrained L-tableau, maps it through the width adjustment,
// the purple tableau and inverse insertion, and checks that the image word
// passes the three conditions, that images are pairwise distinct, that the
// pair maps back to the same L-tableau, and that the image count matches the
// word-filter count.
inline VerifyReport verify_bijection(const Params& p, const ExecPolicy& policy = {}) {
    VerifyReport rep;
    rep.word_count = tev_words(p, policy);
    WordChecker checker(p);
    std::set<Word> seen;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.failure = std::move(msg);
        return false;
    };
    for_each_L(p, [&](const LTableau& L) {
        if (!validate_L(L, true))
            return fail("enumerated L-tableau fails validation:\n" + to_string(L));
        const TableauPair pair = L_to_pair(L);
        if (!(pair_to_L(pair, p) == L))
            return fail("pair does not map back to its L-tableau:\n" + to_string(L));
        const Word w = rsk_inverse(pair);
        if (!checker.passes(w))
            return fail("image word " + to_string(w) + " fails the word conditions");
        if (!seen.insert(w).second)
            return fail("duplicate image word " + to_string(w));
        ++rep.elements;
        return true;
    });
    if (rep.ok && rep.elements != rep.word_count) {
        rep.ok = false;
        rep.failure = "image count " + std::to_string(rep.elements) +
                      " differs from word count " + std::to_string(rep.word_count);
    }
    return rep;
}

}  // namespace tev
