#include "doctest.h"
#include "plm/plactic.hpp"
#include "plm/rewrite.hpp"

#include <random>

using namespace plm;

TEST_CASE("row insertion bumps") {
    auto t = schensted_insert(YoungTableau({{1, 3}}), 2);
    CHECK(t.rows() == std::vector<YoungTableau::Row>{{1, 2}, {3}});
    CHECK(equivalent(presentation("plac"), parse_word("132"), t.reading()));
    CHECK(schensted_insert(YoungTableau({{1, 3}}), 3).rows() == std::vector<YoungTableau::Row>{{1, 3, 3}});
}

TEST_CASE("reading of a tableau inserts back to it") {
    YoungTableau t({{1, 2, 2, 2, 4}, {2, 3, 5}, {4, 4}, {5, 6}});
    CHECK(to_string(t.reading()) == "564423512224");
    CHECK(p_plac(t.reading()) == t);
    CHECK(t.size() == 12);
}

TEST_CASE("invalid shapes are rejected") {
    CHECK_THROWS_AS(YoungTableau({{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(YoungTableau({{1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(YoungTableau({{2, 1}}), std::invalid_argument);
}

TEST_CASE("row and column") {
    CHECK(p_plac(parse_word("12345")).rows().size() == 1);
    CHECK(p_plac(parse_word("54321")).rows().size() == 5);
    CHECK(plac_cochseq(p_plac(parse_word("54321"))).labels == std::vector<unsigned>{0, 1, 2, 3, 4});
}

TEST_CASE("property: insertion respects the presentation") {
    std::mt19937_64 rng(11);
    auto const& m = presentation("plac");
    for (int i = 0; i < 200; ++i) {
        Word w(rng() % 7);
        for (auto& a : w) a = 1 + rng() % 4;
        auto t = p_plac(w);
        CHECK(YoungTableau::valid(t.rows()));
        CHECK(t.size() == w.size());
        CHECK(p_plac(t.reading()) == t);
        for (auto const& v : m.rewrites(w)) CHECK(p_plac(v) == t);
    }
}
