#include "doctest.h"
#include "plm/hypoplactic.hpp"
#include "plm/rewrite.hpp"

#include <algorithm>
#include <random>

using namespace plm;

TEST_CASE("quasi-ribbon insertion") {
    auto t = p_hypo(parse_word("113246546"));
    CHECK(t.rows() == std::vector<QuasiRibbonTableau::Row>{{1, 1, 2}, {3, 4, 4}, {5}, {6, 6}});
    CHECK(p_hypo(parse_word("665344112")) == t);
    CHECK(to_string(t.col_reading()) == "113246546");
    CHECK(to_string(t.row_reading()) == "665344112");
    CHECK(t.row_of(4) == 1);
}

TEST_CASE("insertion between straddling entries") {
    auto t = hypo_insert(QuasiRibbonTableau({{1}, {3}}), 2);
    CHECK(t == p_hypo(parse_word("312")));
    CHECK(equivalent(presentation("hypo"), t.row_reading(), parse_word("312")));
}

TEST_CASE("inversions") {
    // 312 has 3 left of 2 but no 2 left of 1.
    CHECK_FALSE(has_inversion(parse_word("312"), 1));
    CHECK(has_inversion(parse_word("312"), 2));
    CHECK_FALSE(has_inversion(parse_word("123"), 1));
    CHECK(has_inversion(parse_word("244135"), 3));
    CHECK_THROWS_AS(has_inversion(parse_word("11"), 1), std::invalid_argument);
}

TEST_CASE("property: inversions are exactly row breaks") {
    for (auto const& e : evaluations_up_to(4, 5)) {
        for (auto const& w : words_with_evaluation(e)) {
            auto [rel, symbols] = compress_alphabet(w);
            auto t = p_hypo(w);
            for (std::size_t i = 1; i < symbols.size(); ++i)
                CHECK(has_inversion(w, i) == (t.row_of(symbols[i - 1]) != t.row_of(symbols[i])));
        }
    }
}

TEST_CASE("a symbol sits in one row only") {
    CHECK_THROWS_AS(QuasiRibbonTableau({{1, 2}, {2}}), std::invalid_argument);
}

TEST_CASE("paths between tableaux") {
    auto t = p_hypo(parse_word("244135"));
    auto u = p_hypo(parse_word("135244"));
    auto path = hypo_path(t, u);
    REQUIRE_FALSE(path.tableaux.empty());
    CHECK(path.tableaux.front() == t);
    CHECK(path.tableaux.back() == u);
    CHECK(path.tableaux.size() - 1 <= 5);

    auto self = hypo_path(t, t);
    CHECK(self.tableaux.size() == 1);
    CHECK_THROWS_AS(hypo_path(t, p_hypo(parse_word("12345"))), std::invalid_argument);
}

TEST_CASE("property: every step is a factorisation swap") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Word a{1, 2, 3, 4, 5};
        std::shuffle(a.begin(), a.end(), rng);
        Word b = a;
        std::shuffle(b.begin(), b.end(), rng);
        auto path = hypo_path(p_hypo(a), p_hypo(b));
        std::size_t j = 0;
        for (auto const& s : path.steps) {
            if (s.left.empty() && s.right.empty()) continue;
            CHECK(p_hypo(concat(s.left, s.right)) == path.tableaux[j]);
            CHECK(p_hypo(concat(s.right, s.left)) == path.tableaux[j + 1]);
            ++j;
        }
        CHECK(path.tableaux.size() <= 5);
    }
}
