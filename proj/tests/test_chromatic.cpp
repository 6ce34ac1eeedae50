#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rcgraph/chromatic.hpp"
#include "rcgraph/constructions.hpp"

using namespace rcg;

TEST_CASE("proper coloring predicate") {
    Graph c5 = cycle(5);
    CHECK(is_proper_coloring(c5, Coloring{{0, 1, 0, 1, 2}, 3}));
    CHECK_FALSE(is_proper_coloring(c5, Coloring{{0, 1, 0, 1, 0}, 2}));  // 4-0 clash
    CHECK_FALSE(is_proper_coloring(c5, Coloring{{0, 1, 0, 1, 2}, 4}));  // unused color
    CHECK_FALSE(is_proper_coloring(c5, Coloring{{0, 1, 0}, 2}));        // wrong length
}

TEST_CASE("dsatur produces a proper coloring") {
    for (const Graph& g : {petersen(), turan(10, 3), antihole(9), cycle(7)}) {
        Coloring c = greedy_dsatur(g);
        CHECK(is_proper_coloring(g, c));
    }
    CHECK(greedy_dsatur(complete(6)).k == 6);
    CHECK(greedy_dsatur(cycle(6)).k == 2);
}

TEST_CASE("max clique against subset oracle") {
    for (const Graph& g : {petersen(), turan(10, 3), antihole(9), g_act(5, 2, 2),
                           complete_bipartite(4, 4), cycle(11)}) {
        auto clique = max_clique(g);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(g.adjacent(clique[i], clique[j]));
        CHECK(static_cast<int>(clique.size()) == oracle::brute_clique_number(g));
    }
}

TEST_CASE("two coloring finds bipartitions and odd-cycle obstructions") {
    CHECK(two_coloring(complete_bipartite(3, 5)).has_value());
    CHECK(two_coloring(cycle(8)).has_value());
    CHECK_FALSE(two_coloring(cycle(9)).has_value());
}

TEST_CASE("k-colorability edge cases") {
    Graph c5 = cycle(5);
    CHECK_FALSE(is_k_colorable(c5, 2).has_value());
    auto c = is_k_colorable(c5, 3);
    REQUIRE(c.has_value());
    CHECK(is_proper_coloring(c5, *c));
    CHECK(is_k_colorable(edgeless(4), 1).has_value());
    CHECK_FALSE(is_k_colorable(complete(2), 1).has_value());
    CHECK(is_k_colorable(edgeless(0), 0).has_value());
    CHECK_THROWS_AS(is_k_colorable(c5, -1), ValidationError);
}

TEST_CASE("chromatic number matches brute force on small graphs") {
    std::vector<Graph> gs = {edgeless(5),  complete(7), cycle(7),
                             petersen(),   turan(8, 3), antihole(8),
                             complete_bipartite(3, 4),  prism(4)};
    for (const Graph& g : gs) {
        auto res = chromatic_number(g);
        CHECK(res.chi == oracle::brute_chromatic(g));
        CHECK(is_proper_coloring(g, res.coloring));
        CHECK(res.coloring.k == res.chi);
    }
}

TEST_CASE("optimality certificates") {
    auto k = chromatic_number(complete(5));
    CHECK(k.chi == 5);
    CHECK(k.clique.size() == 5);
    CHECK(k.refuted_k == -1);  // clique bound tight
    auto c5 = chromatic_number(cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.refuted_k == -1);  // non-bipartite, so 3 is forced from below
    auto g = chromatic_number(antihole(11));  // chi 6 > omega 5
    CHECK(g.chi == 6);
    CHECK(g.refuted_k == 5);
}

TEST_CASE("independence via complement") {
    CHECK(independence_number(petersen()) == 4);
    CHECK(independence_number(complete(6)) == 1);
    CHECK(independence_number(cycle(9)) == 4);
}

TEST_CASE("closed form for cycle-union complements") {
    CHECK(predicted_chi_cycle_union({3}) == 1);
    CHECK(predicted_chi_cycle_union({3, 3, 3}) == 3);
    CHECK(predicted_chi_cycle_union({7}) == 4);
    CHECK(predicted_chi_cycle_union({4, 8}) == 6);
    CHECK_THROWS_AS(predicted_chi_cycle_union({2}), ValidationError);
}

TEST_CASE("conjectured bound value") {
    CHECK(reed_value_from(3, 4) == 4);
    CHECK(reed_value(petersen()) == 3);   // omega 2, delta 3
    CHECK(reed_value(complete(5)) == 5);
}

TEST_CASE("invariant report is internally consistent") {
    auto rep = compute_invariants(antihole(9));
    CHECK(rep.chi == 5);
    CHECK(rep.omega == 4);
    CHECK(rep.alpha == 2);
    CHECK(rep.delta_max == 6);
    CHECK(rep.reed_value == (4 + 1 + 6 + 1) / 2);
    CHECK(is_proper_coloring(antihole(9), rep.coloring));
}
