#include "doctest.h"
#include "plm/shiftgraph.hpp"

#include <algorithm>

using namespace plm;

TEST_CASE("component sizes and diameters") {
    auto g = component(monoid("plac"), parse_word("12345"));
    CHECK(g.size() == 26);
    CHECK(g.diameter() == 4);
    CHECK(component(monoid("sylv"), parse_word("1234")).size() == 14);
    auto s = component(monoid("stal"), parse_word("1233"));
    CHECK(s.size() == 6);
    CHECK(s.diameter() == 3);
}

TEST_CASE("baxter splits at length 3") {
    auto g = evaluation_graph(monoid("baxt"), Evaluation({1, 1, 1}));
    CHECK(g.size() == 6);
    CHECK(g.components().size() == 2);
    CHECK_THROWS_AS(g.diameter(), std::invalid_argument);
}

TEST_CASE("json round trip") {
    auto g = component(monoid("hypo"), parse_word("1234"));
    CHECK(ShiftGraph::from_json(g.to_json()) == g);
}

TEST_CASE("dot output for a single vertex") {
    auto g = component(monoid("plac"), parse_word("11"));
    CHECK(g.size() == 1);
    CHECK(g.edge_count() == 0);
    auto dot = g.to_dot();
    CHECK(dot.find("graph") != std::string::npos);
}

TEST_CASE("shortest paths") {
    auto g = component(monoid("plac"), parse_word("12345"));
    auto a = monoid("plac").key(parse_word("12345"));
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto path = g.shortest_path(a, g.keys[v]);
        CHECK(path.size() - 1 == g.distance(a, g.keys[v]));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            auto const& adj = g.adjacency[path[i]];
            CHECK(std::find(adj.begin(), adj.end(), path[i + 1]) != adj.end());
        }
    }
    CHECK_THROWS_AS(g.distance(a, "nope"), std::invalid_argument);
}

TEST_CASE("scans") {
    auto r = diameter_scan(monoid("sylv"), 3, 4);
    CHECK(r.all_connected());
    CHECK(r.max_diameter() == 2);
    auto s = diameter_scan(monoid("stal"), 3, 4);
    CHECK_FALSE(s.all_connected());
}
