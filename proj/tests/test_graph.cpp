#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcgraph/graph.hpp"

using namespace rcg;

TEST_CASE("builder rejects bad edges") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(1, 1), ValidationError);
    CHECK_THROWS_AS(b.add_edge(0, 3), ValidationError);
    CHECK_THROWS_AS(b.add_edge(-1, 0), ValidationError);
    CHECK_THROWS_AS(GraphBuilder(-2), ValidationError);
}

TEST_CASE("adding an edge twice is idempotent") {
    GraphBuilder b(2);
    b.add_edge(0, 1).add_edge(1, 0);
    Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("remove_edge undoes add_edge") {
    GraphBuilder b(4);
    b.add_edge(0, 1).add_edge(2, 3).remove_edge(1, 0);
    Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
}

TEST_CASE("factories have the expected sizes") {
    CHECK(edgeless(5).edge_count() == 0);
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(1).regularity() == 0);
    CHECK(cycle(6).regularity() == 2);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_bipartite(2, 3).regularity() == -1);
    Graph p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.regularity() == 3);
    CHECK_THROWS_AS(cycle(2), ValidationError);
}

TEST_CASE("degree profile and regularity") {
    GraphBuilder b(4);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
    Graph g = b.build();
    CHECK(g.degree_profile() == std::vector<int>{1, 1, 2, 2});
    CHECK(g.regularity() == -1);
    CHECK_FALSE(g.is_regular(2));
}

TEST_CASE("complement swaps edges and non-edges") {
    Graph c5 = cycle(5);
    Graph co = complement(c5);
    CHECK(co.edge_count() == 10 - 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(c5.adjacent(u, v) != co.adjacent(u, v));
    CHECK(complement(complete(4)).edge_count() == 0);
}

TEST_CASE("disjoint union concatenates vertex ranges") {
    Graph g = disjoint_union({cycle(3), cycle(4)});
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 7);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.adjacent(3, 4));
    CHECK_THROWS_AS(disjoint_union({}), ValidationError);
}

TEST_CASE("cartesian product adjacency") {
    Graph g = cartesian_product(complete(2), cycle(3));  // prism over a triangle
    CHECK(g.order() == 6);
    CHECK(g.regularity() == 3);
    // (u,x)-(u,y) iff x~y; (u,x)-(v,x) iff u~v
    CHECK(g.adjacent(0, 1));       // same K2 vertex, C3 edge 0-1
    CHECK(g.adjacent(0, 3));       // K2 edge, same C3 vertex
    CHECK_FALSE(g.adjacent(0, 4)); // both coordinates change
}

TEST_CASE("relabel permutes adjacency") {
    Graph p = cycle(4);
    Graph q = relabel(p, {2, 3, 0, 1});
    CHECK(q.edge_count() == 4);
    CHECK(q.adjacent(2, 3));  // image of edge 0-1
    CHECK_THROWS_AS(relabel(p, {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(relabel(p, {0, 1, 2, 2}), ValidationError);
}
