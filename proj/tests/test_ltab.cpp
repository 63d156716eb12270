#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "tev/ltableau.hpp"
#include "tev/word_filter.hpp"

using tev::LTableau;
using tev::Params;
using tev::Partition;
using tev::Tableau;
using tev::TableauPair;
using tev::Word;

namespace {

LTableau worked_example() {
    return LTableau{Params::make(11, 2, 12),
                    Tableau{{{1, 1, 1, 2, 3}, {2, 2}, {3}}},
                    Tableau{{{8, 6, 5, 3, 2},
                             {11, 10, 9, 7, 6, 4, 3, 1},
                             {11, 10, 9, 8, 7, 5, 4, 2, 1}}}};
}

const Word kExampleWord{{3, 2, 1, 3, 2, 1, 2, 1, 1, 2, 3}};

std::vector<LTableau> collect_L(const Params& p) {
    std::vector<LTableau> out;
    tev::for_each_L(p, [&](const LTableau& L) {
        out.push_back(L);
        return true;
    });
    return out;
}

// All members of the constrained blue family, by shape-then-filling scan.
std::vector<Tableau> collect_C(const Params& p) {
    std::vector<Tableau> out;
    tev::for_each_partition(p.blue_cells(), p.r + 1, p.strip_bound(), [&](const Partition& sh) {
        tev::for_each_ssyt(sh, p.r + 1, [&](const Tableau& t) {
            if (tev::in_ssyt_C(t, p)) out.push_back(t);
            return true;
        });
        return true;
    });
    return out;
}

// All members of the adjusted family, likewise.
std::vector<Tableau> collect_AC(const Params& p) {
    std::vector<Tableau> out;
    tev::for_each_partition(p.g, p.r + 1, p.dr(), [&](const Partition& sh) {
        tev::for_each_ssyt(sh, p.r + 1, [&](const Tableau& t) {
            if (tev::in_ssyt_AC(t, p)) out.push_back(t);
            return true;
        });
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    const Params p = Params::make(11, 2, 12);
    CHECK(p.n == 8);
    CHECK(p.blue_cells() == 8);
    CHECK(p.strip_bound() == 5);
    CHECK(p.dr() == 6);
    CHECK(Params::make(1, 2, 2).n == 3);  // boundary n == r+1 is valid
    CHECK_THROWS_AS(Params::make(1, 2, 3), tev::invalid_params);   // r does not divide d
    CHECK_THROWS_AS(Params::make(3, 1, 1), tev::invalid_params);   // n < r+1
    CHECK_THROWS_AS(Params::make(-1, 1, 2), tev::invalid_params);  // g < 0
    CHECK_THROWS_AS(Params::make(0, 1, 0), tev::invalid_params);   // d < r
    CHECK_THROWS_AS(Params::make(0, 0, 1), tev::invalid_params);   // r < 1
}

TEST_CASE("the worked example is a constrained L-tableau") {
    const LTableau L = worked_example();
    CHECK(tev::validate_L(L, false));
    CHECK(tev::validate_L(L, true));
}

TEST_CASE("count invariant violations return false") {
    // blue part too large for the parameters: complementary but 4 blue cells
    // where blue_cells() == 2
    const Params p = Params::make(2, 2, 4);
    REQUIRE(p.blue_cells() == 2);
    const LTableau bad{p, Tableau{{{1, 1}, {2, 2}}}, Tableau{{{}, {}, {2, 1}}}};
    CHECK_FALSE(tev::validate_L(bad, false));
    // red content must be (r^g)
    const LTableau badred{p, Tableau{{{1, 3}}}, Tableau{{{}, {2, 1}, {2, 2}}}};
    CHECK_FALSE(tev::validate_L(badred, false));
}

TEST_CASE("grid dimension mismatches are structural errors") {
    const Params p = Params::make(2, 2, 4);
    CHECK_THROWS_AS(tev::validate_L(LTableau{p, Tableau{{{1, 3}}}, Tableau{{{2, 1}, {2, 1}}}},
                                    false),
                    std::invalid_argument);
    CHECK_THROWS_AS(tev::validate_L(LTableau{p, Tableau{{{1}}}, Tableau{{{}, {2, 1}, {2, 1}}}},
                                    false),
                    std::invalid_argument);
}

TEST_CASE("the all-blue genus-zero tableau is valid") {
    const LTableau L{Params::make(0, 1, 2), Tableau{{{1}, {2}}}, Tableau{{{}, {}}}};
    CHECK(tev::validate_L(L, true));
}

TEST_CASE("constrained validation rejects strip-carrying blue parts") {
    const Params p = Params::make(2, 2, 4);
    REQUIRE(p.strip_bound() == 2);
    const Tableau red{{{}, {2, 1}, {2, 1}}};
    const LTableau with_strip{p, Tableau{{{1, 1}}}, red};
    CHECK(tev::validate_L(with_strip, false));
    CHECK_FALSE(tev::validate_L(with_strip, true));
    const LTableau without_strip{p, Tableau{{{1, 3}}}, red};
    CHECK(tev::validate_L(without_strip, true));
    // the last red-only family at the degenerate-free boundary
    const LTableau redonly{Params::make(2, 1, 2), Tableau{}, Tableau{{{2}, {1}}}};
    CHECK(tev::validate_L(redonly, true));
}

TEST_CASE("width adjustment on the worked example") {
    const Params p = Params::make(11, 2, 12);
    const Tableau blue{{{1, 1, 1, 2, 3}, {2, 2}, {3}}};
    const Tableau adjusted{{{1, 1, 1, 1, 2, 3}, {2, 2, 2}, {3, 3}}};
    CHECK(tev::psi(blue, p) == adjusted);
    CHECK(tev::in_ssyt_AC(adjusted, p));
    CHECK(tev::psi_inverse(adjusted, p) == blue);
}

TEST_CASE("width adjustment is the identity at d == g+r") {
    const Params p = Params::make(2, 1, 3);
    const Tableau b{{{1, 1}}};
    REQUIRE(tev::in_ssyt_C(b, p));
    CHECK(tev::psi(b, p) == b);
    CHECK(tev::psi_inverse(b, p) == b);
}

TEST_CASE("width adjustment removes full columns when d > g+r") {
    // all columns removed: genus zero
    CHECK(tev::psi(Tableau{{{1, 1}, {2, 2}}}, Params::make(0, 1, 3)) == Tableau{});
    // one column removed
    CHECK(tev::psi(Tableau{{{1, 1}, {2, 2}}}, Params::make(2, 1, 4)) == Tableau{{{1}, {2}}});
    CHECK(tev::psi_inverse(Tableau{{{1}, {2}}}, Params::make(2, 1, 4)) ==
          Tableau{{{1, 1}, {2, 2}}});
    CHECK(tev::psi_inverse(Tableau{}, Params::make(0, 1, 3)) == Tableau{{{1, 1}, {2, 2}}});
}

TEST_CASE("width adjustment rejects nonmembers") {
    CHECK_THROWS_AS(tev::psi(Tableau{{{1}}}, Params::make(11, 2, 12)), std::invalid_argument);
    CHECK_THROWS_AS(tev::psi_inverse(Tableau{{{1}}}, Params::make(11, 2, 12)),
                    std::invalid_argument);
}

TEST_CASE("width adjustment is a bijection between the two families") {
    for (const Params& p : {Params::make(2, 2, 4), Params::make(3, 2, 6), Params::make(4, 1, 3),
                            Params::make(3, 1, 4), Params::make(2, 3, 6)}) {
        const std::vector<Tableau> members = collect_C(p);
        std::set<Tableau> images;
        for (const Tableau& b : members) {
            const Tableau adj = tev::psi(b, p);
            REQUIRE(tev::in_ssyt_AC(adj, p));
            REQUIRE(adj.cell_count() == p.g);
            REQUIRE(tev::psi_inverse(adj, p) == b);
            images.insert(adj);
        }
        REQUIRE(images.size() == members.size());
        const std::vector<Tableau> adjusted = collect_AC(p);
        REQUIRE(std::set<Tableau>(adjusted.begin(), adjusted.end()) == images);
    }
}

TEST_CASE("purple tableau of the worked example") {
    const Tableau red{{{8, 6, 5, 3, 2},
                       {11, 10, 9, 7, 6, 4, 3, 1},
                       {11, 10, 9, 8, 7, 5, 4, 2, 1}}};
    const Tableau purple{{{1, 4, 7, 9, 10, 11}, {2, 5, 8}, {3, 6}}};
    CHECK(tev::phi(red, 11, 2) == purple);
    CHECK(tev::phi_inverse(purple, 11, 2) == red);
}

TEST_CASE("purple tableau small cases") {
    CHECK(tev::phi(Tableau{{{}, {}}}, 0, 1) == Tableau{});
    CHECK(tev::phi(Tableau{{{}, {2, 1}}}, 2, 1) == Tableau{{{1, 2}}});
    CHECK(tev::phi_inverse(Tableau{{{1, 2}}}, 2, 1) == Tableau{{{}, {2, 1}}});
    // a value in too many rows
    CHECK_THROWS_AS(tev::phi(Tableau{{{1}, {1}}}, 1, 1), std::invalid_argument);
    // size, height and standardness mismatches
    CHECK_THROWS_AS(tev::phi_inverse(Tableau{{{1, 3}, {2}}}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(tev::phi_inverse(Tableau{{{1}, {2}, {3}}}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(tev::phi_inverse(Tableau{{{1, 1}}}, 2, 1), std::invalid_argument);
}

TEST_CASE("purple map is a bijection onto standard tableaux") {
    for (const auto& [g, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {3, 3}}) {
        // enumerate every red tableau: all nondecreasing row-length profiles
        // with total rg and rows at most g wide
        std::vector<Tableau> reds;
        std::vector<int> lens(r + 1, 0);
        auto rec = [&](auto&& self, int k, int minlen, int left) -> void {
            if (k == r + 1) {
                if (left != 0) return;
                tev::for_each_red_filling(lens, g, r, [&](const Tableau& red) {
                    reds.push_back(red);
                    return true;
                });
                return;
            }
            for (int len = minlen; len <= std::min(g, left); ++len) {
                lens[k] = len;
                self(self, k + 1, len, left - len);
            }
        };
        rec(rec, 0, 0, g * r);

        std::set<Tableau> images;
        for (const Tableau& red : reds) {
            REQUIRE(tev::is_valid_red(red, g, r));
            const Tableau purple = tev::phi(red, g, r);
            REQUIRE(tev::validate_tableau(purple, tev::TabMode::syt));
            REQUIRE(purple.cell_count() == g);
            REQUIRE(purple.height() <= r + 1);
            // shapes complement each other in the (r+1) x g rectangle
            for (int k = 0; k <= r; ++k)
                REQUIRE(purple.row_length(k) + red.row_length(k) == g);
            REQUIRE(tev::phi_inverse(purple, g, r) == red);
            images.insert(purple);
        }
        REQUIRE(images.size() == reds.size());

        // surjectivity: every standard tableau of size g, height <= r+1 is hit
        std::size_t syt_count = 0;
        tev::for_each_partition(g, r + 1, g, [&](const Partition& sh) {
            tev::for_each_ssyt(sh, g, [&](const Tableau& t) {
                if (tev::validate_tableau(t, tev::TabMode::syt)) {
                    ++syt_count;
                    REQUIRE(images.count(t) == 1);
                }
                return true;
            });
            return true;
        });
        REQUIRE(syt_count == images.size());
    }
}

TEST_CASE("enumeration counts on the small cases") {
    CHECK(collect_L(Params::make(0, 1, 2)).size() == 1);
    CHECK(collect_L(Params::make(2, 1, 2)).size() == 1);
    CHECK(collect_L(Params::make(2, 2, 4)).size() == 4);
    CHECK(tev::tev_ltab(Params::make(4, 1, 3)) == 2);
    CHECK(tev::tev_ltab(Params::make(1, 2, 2)) == 0);
    CHECK(tev::tev_ltab(Params::make(3, 2, 6)) == 20);
}

TEST_CASE("enumeration yields valid, distinct tableaux in a stable order") {
    for (const Params& p : {Params::make(2, 2, 4), Params::make(4, 1, 3), Params::make(3, 2, 6)}) {
        const std::vector<LTableau> all = collect_L(p);
        for (const LTableau& L : all) REQUIRE(tev::validate_L(L, true));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) REQUIRE(!(all[i] == all[j]));
        CHECK(collect_L(p) == all);  // restartable stream
    }
}

TEST_CASE("enumeration supports early stop") {
    int seen = 0;
    const bool complete = tev::for_each_L(Params::make(2, 2, 4), [&](const LTableau&) {
        return ++seen < 2;
    });
    CHECK_FALSE(complete);
    CHECK(seen == 2);
}

TEST_CASE("leftmost d-g-r columns are blue whenever d > g+r") {
    for (const Params& p : {Params::make(2, 1, 4), Params::make(1, 2, 4), Params::make(2, 2, 6)}) {
        REQUIRE(p.d > p.g + p.r);
        const int cut = p.d - p.g - p.r;
        for (const LTableau& L : collect_L(p))
            for (int k = 0; k <= p.r; ++k) REQUIRE(L.blue.row_length(k) >= cut);
    }
}

TEST_CASE("the worked example maps to the worked pair and word") {
    const LTableau L = worked_example();
    const TableauPair pair = tev::L_to_pair(L);
    CHECK(pair.p == Tableau{{{1, 1, 1, 1, 2, 3}, {2, 2, 2}, {3, 3}}});
    CHECK(pair.q == Tableau{{{1, 4, 7, 9, 10, 11}, {2, 5, 8}, {3, 6}}});
    CHECK(tev::pair_to_L(pair, L.params) == L);
    CHECK(tev::L_to_word(L) == kExampleWord);
}

TEST_CASE("genus zero maps to the empty pair and word") {
    const LTableau L{Params::make(0, 1, 2), Tableau{{{1}, {2}}}, Tableau{{{}, {}}}};
    const TableauPair pair = tev::L_to_pair(L);
    CHECK(pair.p == Tableau{});
    CHECK(pair.q == Tableau{});
    CHECK(tev::L_to_word(L) == Word{});
}

TEST_CASE("pair round trip and word injectivity over small families") {
    for (const Params& p : {Params::make(2, 2, 4), Params::make(4, 1, 3), Params::make(6, 1, 4),
                            Params::make(3, 2, 6)}) {
        std::set<Word> words;
        for (const LTableau& L : collect_L(p)) {
            const TableauPair pair = tev::L_to_pair(L);
            REQUIRE(tev::shape(pair.p) == tev::shape(pair.q));
            REQUIRE(tev::pair_to_L(pair, p) == L);
            REQUIRE(words.insert(tev::L_to_word(L)).second);
        }
        REQUIRE(words.size() == tev::tev_ltab(p));
    }
}

TEST_CASE("image words at (2,2,4)") {
    std::set<Word> words;
    for (const LTableau& L : collect_L(Params::make(2, 2, 4))) words.insert(tev::L_to_word(L));
    CHECK(words == std::set<Word>{Word{{1, 3}}, Word{{2, 1}}, Word{{3, 1}}, Word{{3, 2}}});
}

TEST_CASE("red filling stream honors ordering, content and structure") {
    std::vector<Tableau> reds;
    tev::for_each_red_filling({1, 1, 2}, 2, 2, [&](const Tableau& red) {
        reds.push_back(red);
        return true;
    });
    REQUIRE(reds == std::vector<Tableau>{Tableau{{{2}, {1}, {2, 1}}}});

    // a row longer than g cannot hold distinct values
    reds.clear();
    tev::for_each_red_filling({0, 0, 2}, 1, 2, [&](const Tableau& red) {
        reds.push_back(red);
        return true;
    });
    CHECK(reds.empty());

    // wrong cell total yields nothing; malformed lengths are structural
    reds.clear();
    tev::for_each_red_filling({0, 1, 1}, 2, 2, [&](const Tableau& red) {
        reds.push_back(red);
        return true;
    });
    CHECK(reds.empty());
    CHECK_THROWS_AS(tev::for_each_red_filling({2, 1, 1}, 2, 2, [](const Tableau&) { return true; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(tev::for_each_red_filling({1, 1}, 2, 2, [](const Tableau&) { return true; }),
                    std::invalid_argument);
}
