#include "doctest.h"
#include "plm/words.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace plm;

TEST_CASE("evaluation counts symbols") {
    auto e = evaluation(parse_word("361135112565"));
    CHECK(e.counts() == std::vector<std::size_t>{4, 1, 2, 0, 3, 2});
    CHECK(e.total() == 12);
    CHECK(e.support() == 5);
    CHECK(e[1] == 4);
    CHECK(evaluation(parse_word("12"), 4).rank() == 4);
}

TEST_CASE("rotation") {
    CHECK(rotate(parse_word("13254"), 2) == parse_word("25413"));
    CHECK(rotate(parse_word("13254"), 0) == parse_word("13254"));
    CHECK(rotate(Word{}, 0).empty());
}

TEST_CASE("words with a given evaluation") {
    auto ws = words_with_evaluation(Evaluation({2, 1}));
    CHECK(ws == std::vector<Word>{parse_word("112"), parse_word("121"), parse_word("211")});
    CHECK(words_with_evaluation(Evaluation({1, 1, 1, 1, 1})).size() == 120);
    CHECK(multinomial(Evaluation({2, 2, 1})) == 30);
    CHECK(words_with_evaluation(Evaluation({2, 2, 1})).size() == 30);
}

TEST_CASE("evaluations up to a total") {
    auto es = evaluations_up_to(2, 2);
    CHECK(es.size() == 6);
    for (auto const& e : evaluations_with_total(3, 4)) CHECK(e.total() == 4);
}

TEST_CASE("cocharge sequences of the extreme standard words") {
    for (std::size_t n = 1; n <= 7; ++n) {
        Word up, down;
        for (Letter a = 1; a <= n; ++a) up.push_back(a);
        down.assign(up.rbegin(), up.rend());
        std::vector<unsigned> zeros(n, 0), stairs;
        for (unsigned i = 0; i < n; ++i) stairs.push_back(i);
        CHECK(cochseq(up).labels == zeros);
        CHECK(cochseq(down).labels == stairs);
    }
    CHECK(to_string(cochseq(parse_word("1246375"))) == "(0,0,0,1,1,2,2)");
}

TEST_CASE("parsing and printing") {
    CHECK(to_string(parse_word("3121")) == "3121");
    CHECK(parse_evaluation("2,0,1") == Evaluation({2, 0, 1}));
    CHECK_THROWS(parse_word("12x"));
    CHECK(is_standard(parse_word("2413")));
    CHECK_FALSE(is_standard(parse_word("2213")));
}

TEST_CASE("property: rotations preserve evaluation and compose") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Word w(1 + rng() % 9);
        for (auto& a : w) a = 1 + rng() % 4;
        auto k = rng() % w.size();
        auto j = rng() % w.size();
        CHECK(evaluation(rotate(w, k), 4) == evaluation(w, 4));
        CHECK(rotate(rotate(w, k), j) == rotate(w, (k + j) % w.size()));
    }
}
