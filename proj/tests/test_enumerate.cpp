#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rcgraph/enumerate.hpp"

using namespace rcg;

TEST_CASE("counts match the brute-force oracle for n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (int r = 0; r < n; ++r) {
            if (n * r % 2 != 0) continue;
            long expect = oracle::brute_regular_count(n, r);
            CAPTURE(n);
            CAPTURE(r);
            CHECK(static_cast<long>(enumerate_regular(n, r).size()) == expect);
        }
}

TEST_CASE("known class counts at larger orders") {
    // disconnected graphs included, e.g. K4 + K4 is the 6th cubic graph on 8
    CHECK(enumerate_regular(8, 3).size() == 6);
    CHECK(enumerate_regular(10, 3).size() == 21);
    CHECK(enumerate_regular(9, 4).size() == 16);
    CHECK(enumerate_regular(10, 4).size() == 60);
    CHECK(enumerate_regular(11, 4).size() == 266);
    CHECK(enumerate_regular(8, 2).size() == 3);
}

TEST_CASE("dense cells go through the complement") {
    CHECK(enumerate_regular(8, 5).size() == enumerate_regular(8, 2).size());
    auto gs = enumerate_regular(9, 6);
    CHECK(gs.size() == enumerate_regular(9, 2).size());
    for (const auto& g : gs) CHECK(g.regularity() == 6);
}

TEST_CASE("output is regular, canonical, and duplicate-free") {
    auto gs = enumerate_regular(9, 4);
    std::set<CanonicalForm> forms;
    for (const auto& g : gs) {
        CHECK(g.order() == 9);
        CHECK(g.regularity() == 4);
        auto [form, copy] = canonicalize(g);
        CHECK(copy == g);  // already in canonical labeling
        forms.insert(form);
    }
    CHECK(forms.size() == gs.size());
}

TEST_CASE("worker count does not change the output") {
    auto serial = enumerate_regular(10, 3, 1);
    auto parallel = enumerate_regular(10, 3, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("degenerate and invalid parameters") {
    CHECK(enumerate_regular(5, 0).size() == 1);
    CHECK(enumerate_regular(4, 3).size() == 1);  // K4
    CHECK_THROWS_AS(enumerate_regular(5, 3), ValidationError);  // parity
    CHECK_THROWS_AS(enumerate_regular(4, 4), ValidationError);  // r >= n
    CHECK_THROWS_AS(enumerate_regular(0, 0), ValidationError);
    CHECK_THROWS_AS(enumerate_regular(40, 3), ValidationError);  // above order cap
}
