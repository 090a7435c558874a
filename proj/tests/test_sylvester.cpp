#include "doctest.h"
#include "plm/rewrite.hpp"
#include "plm/sylvester.hpp"
#include "plm/words.hpp"

#include <algorithm>
#include <numeric>

using namespace plm;

TEST_CASE("sylvester insertion") {
    auto t = p_sylv(parse_word("5451761524"));
    CHECK(t.key() == "4(2(1(1)(·))(4))(5(5(5)(·))(6(·)(7)))");
    CHECK(p_sylv(parse_word("1571456254")) == t);
    CHECK(RightStrictBst::valid(t.tree()));
    CHECK(satisfies_structure_lemmas(t));
}

TEST_CASE("readings are exactly the class") {
    auto t = p_sylv(parse_word("5451761524"));
    auto r = readings(t.tree());
    CHECK(std::binary_search(r.begin(), r.end(), parse_word("5451761524")));
    CHECK(std::binary_search(r.begin(), r.end(), parse_word("1571456254")));
    for (auto const& w : r) CHECK(p_sylv(w) == t);
    auto small = p_sylv(parse_word("2113"));
    auto rs = readings(small.tree());
    CHECK(rs.size() == close(presentation("sylv"), parse_word("2113"))->size());
}

TEST_CASE("chains") {
    CHECK(p_sylv(parse_word("1234")).key() == "4(3(2(1)(·))(·))(·)");
    CHECK(p_sylv(parse_word("4321")).key() == "1(·)(2(·)(3(·)(4)))");
}

TEST_CASE("primary, secondary and tertiary nodes") {
    BinaryTree t;
    auto r = t.add_root(5);
    auto a = t.add_child(r, true, 5);
    auto b = t.add_child(a, true, 2);
    auto c = t.add_child(b, false, 5);
    auto d = t.add_child(c, true, 4);
    auto e = t.add_child(d, false, 5);
    auto f = t.add_child(e, true, 5);
    t.add_child(f, true, 5);
    REQUIRE(RightStrictBst::valid(t));
    auto cls = classify_nodes(t, 5);
    CHECK(cls.primary.size() == 2);
    CHECK(cls.secondary.size() == 1);
    CHECK(cls.tertiary.size() == 3);
}

TEST_CASE("the published path") {
    auto t = p_sylv(parse_word("13254"));
    auto u = p_sylv(parse_word("23541"));
    auto path = sylv_path(t, u);
    std::vector<std::string> rules;
    for (auto const& s : path.steps) rules.push_back(s.rule);
    CHECK(rules == std::vector<std::string>{"base 2", "2(b)", "1(b)", "4(d)(4)", "3(b)"});
    CHECK(path.trees.front() == t);
    CHECK(path.trees.back() == u);
}

TEST_CASE("property: all standard pairs of length 4") {
    Word base{1, 2, 3, 4};
    std::vector<Word> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    for (auto const& a : perms) {
        for (auto const& b : perms) {
            auto t = p_sylv(a), u = p_sylv(b);
            auto path = sylv_path(t, u);
            CHECK(path.trees.front() == t);
            CHECK(path.trees.back() == u);
            CHECK(path.trees.size() - 1 <= 4);
            for (auto const& s : path.steps) {
                if (s.left.empty() || s.right.empty()) continue;
                CHECK(p_sylv(concat(s.left, s.right)).evaluation(4) == t.evaluation(4));
            }
        }
    }
}

TEST_CASE("plans checked against their own conditions") {
    auto u = p_sylv(parse_word("23541"));
    auto plan = traversal_plan(u);
    CHECK(plan.size() == 5);
    CHECK(satisfies_path_conditions(u, plan, plan.size() - 1));
}
