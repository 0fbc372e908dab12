#include <doctest.h>

#include "rigidlab/construct.hpp"

using namespace rigidlab;

TEST_CASE("simple constructor expressions") {
    CHECK(build_graph_from_expression("complete 4") == complete(4));
    CHECK(build_graph_from_expression("bipartite 5 5") == complete_bipartite(5, 5));
    CHECK(build_graph_from_expression("kchain 1,6,6,2") == k_chain(ChainSpec({1, 6, 6, 2})));
    CHECK(build_graph_from_expression("kring 2,2,2") == k_ring(ChainSpec({2, 2, 2})));
    CHECK(build_graph_from_expression("  complete   4  ") == complete(4));
}

TEST_CASE("nested constructor expressions") {
    Graph g = build_graph_from_expression("cone(bipartite 5 5)");
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 35);
    CHECK(build_graph_from_expression("cone(cone(complete 3))") == complete(5));

    Graph att = build_graph_from_expression(
        "attach(complete 6; left=0,1; right=2,3,4,5; interior=3,5)");
    CHECK(att.vertex_count() == 14);
    CHECK(att.edge_count() == 56);

    Graph ring = build_graph_from_expression(
        "attach(kchain 2,16,4; left=0,1; right=18,19,20,21; interior=3,5)");
    CHECK(ring.vertex_count() == 30);
    CHECK(ring.edge_count() == 137);
}

TEST_CASE("hennenberg expressions") {
    Graph g = build_graph_from_expression("hennenberg(complete 4; d=2; i=0; j=1; others=2)");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 8);

    // d=1 needs no other vertices; the list may be empty
    Graph split = build_graph_from_expression("hennenberg(complete 2; d=1; i=0; j=1; others=)");
    CHECK(split.vertex_count() == 3);
    CHECK(split.edge_count() == 2);
}

TEST_CASE("expression errors") {
    CHECK_THROWS_AS(build_graph_from_expression("pentagon 5"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("complete"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("complete 4 extra"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("cone(complete 3"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("kchain"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("kchain 1,,2"), ExpressionError);
    CHECK_THROWS_AS(build_graph_from_expression("attach(complete 6; left=0,1)"), ExpressionError);
    CHECK_THROWS_AS(
        build_graph_from_expression("attach(complete 6; right=2; left=0,1; interior=3)"),
        ExpressionError);
    // graph-level violations surface as expression errors too
    CHECK_THROWS_AS(build_graph_from_expression("complete 0"), ExpressionError);
    CHECK_THROWS_AS(
        build_graph_from_expression("attach(complete 6; left=0,1; right=1,2,3,4; interior=3,5)"),
        ExpressionError);
}
