#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ncheeger;

TEST_CASE("triangle degrees") {
    const auto g = build_graph({{"v1", "v2", Rational(1)},
                                {"v2", "v3", Rational(1)},
                                {"v1", "v3", Rational(1)}});
    REQUIRE(g.vertex_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.total_measure() == 6);
}

TEST_CASE("path degrees") {
    const auto g = build_graph({{"v1", "v2", Rational(1)}, {"v2", "v3", Rational(1)}});
    CHECK(g.degree(g.index_of("v1")) == 1);
    CHECK(g.degree(g.index_of("v2")) == 2);
    CHECK(g.degree(g.index_of("v3")) == 1);
}

TEST_CASE("construction failures") {
    CHECK_THROWS_AS(build_graph({{"v1", "v2", Rational(1)}, {"v2", "v1", Rational(1)}}),
                    DuplicateEdgeError);
    CHECK_THROWS_AS(build_graph({{"v1", "v2", Rational(0)}}), NonPositiveWeightError);
    CHECK_THROWS_AS(build_graph({{"v1", "v2", Rational(-1, 2)}}), NonPositiveWeightError);
    CHECK_THROWS_AS(build_graph({{"v1", "v2", Rational(1)}, {"v3", "v4", Rational(1)}}),
                    DisconnectedGraphError);
    CHECK_THROWS_AS(build_graph({}), Error);
}

TEST_CASE("self-loop counts once toward the degree and does not connect") {
    const auto g = build_graph({{"v1", "v1", Rational(3)}, {"v1", "v2", Rational(1)}});
    CHECK(g.degree(g.index_of("v1")) == 4);
    CHECK(g.degree(g.index_of("v2")) == 1);

    // a self-loop is not a path between components
    CHECK_THROWS_AS(build_graph({{"v1", "v1", Rational(1)}, {"v2", "v3", Rational(1)}}),
                    DisconnectedGraphError);
}

TEST_CASE("vertices are ordered lexicographically") {
    const auto g = build_graph({{"b", "c", Rational(1)}, {"a", "b", Rational(1)}});
    CHECK(g.vertex_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.index_of("a") == 0);
    CHECK_THROWS_AS(g.index_of("zz"), UnknownVertexError);
    CHECK_FALSE(g.find("zz").has_value());
}

TEST_CASE("edge list covers each edge once with sorted endpoints") {
    const auto g = build_graph({{"v2", "v1", Rational(2)},
                                {"v2", "v2", Rational(5)},
                                {"v2", "v3", Rational(7, 2)}});
    REQUIRE(g.edges().size() == 3);
    for (const auto& e : g.edges()) {
        CHECK(e.a <= e.b);
        CHECK(e.weight == g.weight(e.a, e.b));
        CHECK(g.weight(e.a, e.b) == g.weight(e.b, e.a));
    }
}
