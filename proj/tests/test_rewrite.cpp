#include "doctest.h"
#include "plm/monoid.hpp"
#include "plm/rewrite.hpp"

#include <algorithm>
#include <set>

using namespace plm;

namespace {

std::set<std::string> neighbor_words(std::string_view m, std::string const& w) {
    std::set<std::string> out;
    for (auto const& c : word_neighbors(presentation(m), parse_word(w))) out.insert(to_string(c->canonical()));
    return out;
}

}  // namespace

TEST_CASE("closures") {
    auto c = close(presentation("plac"), parse_word("132"));
    CHECK(c->members == std::vector<Word>{parse_word("132"), parse_word("312")});
    CHECK(close(presentation("plac"), parse_word("12345"))->size() == 1);
    CHECK(close(presentation("baxt"), parse_word("2431"))->size() == 1);
    CHECK(equivalent(presentation("stal"), parse_word("1212"), parse_word("2112")));
    CHECK_FALSE(equivalent(presentation("plac"), parse_word("123"), parse_word("132")));
}

TEST_CASE("classes are closed under every rule") {
    for (auto const& key : presentation_keys()) {
        if (key == "counterexample") continue;
        auto const& m = presentation(key);
        auto c = close(m, parse_word("21312"));
        for (auto const& w : c->members)
            for (auto const& v : m.rewrites(w)) CHECK(c->contains(v));
    }
}

TEST_CASE("word neighbors of the plactic row") {
    auto n = neighbor_words("plac", "12345");
    for (auto const& w : {"12345", "51234", "21345", "45123", "34125"}) {
        bool hit = false;
        for (auto const& v : n) hit = hit || equivalent(presentation("plac"), parse_word(v), parse_word(w));
        CHECK_MESSAGE(hit, w);
    }
    CHECK(n.size() == 5);
}

TEST_CASE("baxter length 3 words are pairwise distinct and 123 rotates onto 231 and 312") {
    auto n = neighbor_words("baxt", "123");
    CHECK(n == std::set<std::string>{"123", "231", "312"});
}

TEST_CASE("property: neighbor relation is symmetric") {
    for (auto key : {"plac", "hypo", "sylv", "stal", "baxt"}) {
        auto const& m = presentation(key);
        for (auto const& w : words_with_evaluation(Evaluation({2, 1, 1}))) {
            for (auto const& c : word_neighbors(m, w)) {
                bool back = false;
                for (auto const& d : word_neighbors(m, c->canonical())) back = back || d->contains(w);
                CHECK_MESSAGE(back, key, " ", to_string(w));
            }
        }
    }
}

TEST_CASE("counterexample monoid") {
    using namespace counterexample;
    CHECK(mu(from_letters("axyxyxyb")) == 3);
    CHECK(mu(from_letters("byxyxyxa")) == 1);
    CHECK(mu(from_letters("ab")) == 0);
    CHECK(to_letters(from_letters("abxy")) == "abxy");
    CHECK(in_language(from_letters("axyb")));
}

TEST_CASE("oracle and insertion agree on a small evaluation") {
    Evaluation e({2, 1, 2});
    for (auto key : {"plac", "hypo", "sylv", "stal", "taig", "baxt"}) {
        auto a = monoid(key).partition(e);
        auto b = oracle_monoid(key).partition(e);
        std::set<std::vector<Word>> ca, cb;
        for (auto const& [k, v] : *a) ca.insert(v);
        for (auto const& [k, v] : *b) cb.insert(v);
        CHECK_MESSAGE(ca == cb, key);
    }
}
