#include "doctest.h"
#include "plm/baxter.hpp"
#include "plm/rewrite.hpp"

#include <random>

using namespace plm;

TEST_CASE("canopies of a twin pair") {
    auto p = p_baxt(parse_word("42531643"));
    CHECK(p.left.canopy() == "0110101");
    CHECK(p.right.canopy() == "1001010");
    CHECK(p.valid());
    CHECK(p_baxt(parse_word("7")).left.canopy().empty());
}

TEST_CASE("readings") {
    auto r = baxt_readings(p_baxt(parse_word("2431")));
    CHECK(r == std::vector<Word>{parse_word("2431")});
    CHECK(baxt_readings(p_baxt(parse_word("123"))) == std::vector<Word>{parse_word("123")});
    auto big = p_baxt(parse_word("42531643"));
    for (auto const& w : baxt_readings(big)) CHECK(p_baxt(w) == big);
}

TEST_CASE("conjugacy witness") {
    auto u = parse_word("123"), v = parse_word("132");
    auto [g, h] = baxt_oconj_witness(u, v);
    CHECK(to_string(g) == "123132");
    CHECK(to_string(h) == "132123");
    CHECK(p_baxt(concat(u, g)) == p_baxt(concat(g, v)));
    CHECK(p_baxt(concat(h, u)) == p_baxt(concat(v, h)));
}

TEST_CASE("property: readings match the presentation") {
    std::mt19937_64 rng(17);
    auto const& m = presentation("baxt");
    for (int i = 0; i < 100; ++i) {
        Word w(1 + rng() % 5);
        for (auto& a : w) a = 1 + rng() % 3;
        auto r = baxt_readings(p_baxt(w));
        CHECK(r.size() == close(m, w)->size());
    }
}
