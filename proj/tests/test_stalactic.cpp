#include "doctest.h"
#include "plm/rewrite.hpp"
#include "plm/stalactic.hpp"

#include <random>

using namespace plm;

TEST_CASE("stalactic insertion") {
    auto t = p_stal(parse_word("361135112565"));
    CHECK(t.key() == "3^2|1^4|2^1|6^2|5^3");
    CHECK(to_string(t.top_row()) == "31265");
    CHECK(p_stal(t.reading()) == t);
    CHECK_THROWS_AS(StalacticTableau({{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("iota") {
    CHECK(to_string(iota(p_stal(parse_word("2")))) == "2");
    CHECK(to_string(iota(p_stal(parse_word("1233")))) == "12");
    CHECK(least_rotation(parse_word("3121")) == parse_word("1213"));
}

TEST_CASE("paths stay short") {
    for (auto const& a : words_with_evaluation(Evaluation({2, 2}))) {
        for (auto const& b : words_with_evaluation(Evaluation({2, 2}))) {
            auto t = p_stal(a), u = p_stal(b);
            if (!(kappa(t, 2) == kappa(u, 2))) continue;
            auto path = stal_path(t, u);
            CHECK(path.tableaux.front() == t);
            CHECK(path.tableaux.back() == u);
            CHECK(path.steps.size() <= 1);
        }
    }
}

TEST_CASE("conjugacy witnesses") {
    auto [g, h] = stal_oconj_witness(parse_word("12"), parse_word("21"));
    CHECK(p_stal(concat(g, parse_word("12"))) == p_stal(concat(parse_word("21"), g)));
    CHECK(p_stal(concat(parse_word("12"), h)) == p_stal(concat(h, parse_word("21"))));
}

TEST_CASE("property: insertion respects the presentation") {
    std::mt19937_64 rng(13);
    auto const& m = presentation("stal");
    for (int i = 0; i < 200; ++i) {
        Word w(rng() % 7);
        for (auto& a : w) a = 1 + rng() % 3;
        auto t = p_stal(w);
        for (auto const& v : m.rewrites(w)) CHECK(p_stal(v) == t);
        CHECK(t.size() == w.size());
    }
}
