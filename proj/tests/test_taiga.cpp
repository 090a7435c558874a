#include "doctest.h"
#include "plm/rewrite.hpp"
#include "plm/taiga.hpp"

#include <algorithm>
#include <random>

using namespace plm;

TEST_CASE("taiga insertion merges equal symbols") {
    auto t = p_taig(parse_word("135671456254"));
    CHECK(t.key() == "4^2(2^1(1^2)(3^1))(5^3(·)(6^2(·)(7^1)))");
    CHECK(t.size() == 12);
    CHECK(t.node_count() == 7);
    CHECK(p_taig(t.postfix_reading()) == t);
}

TEST_CASE("psi keeps the shape and forgets multiplicities") {
    auto t = p_taig(parse_word("2112"));
    auto s = psi(t);
    CHECK(s.node_count() == t.node_count());
    CHECK(RightStrictBst::valid(s.tree()));
}

TEST_CASE("property: taiga equality is psi equality") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
        Word u(rng() % 8), v(u.size());
        for (auto& a : u) a = 1 + rng() % 3;
        v = u;
        std::shuffle(v.begin(), v.end(), rng);
        bool same = p_taig(u) == p_taig(v);
        CHECK(same == (psi(p_taig(u)) == psi(p_taig(v))));
        CHECK(same == equivalent(presentation("taig"), u, v));
    }
}

TEST_CASE("paths between taiga trees") {
    auto t = p_taig(parse_word("1123"));
    auto u = p_taig(parse_word("3211"));
    auto path = taig_path(t, u);
    CHECK(path.trees.front() == t);
    CHECK(path.trees.back() == u);
    CHECK(path.trees.size() - 1 <= 3);
}
