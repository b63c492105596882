#include "helpers.hpp"

#include "iscount/coloring.hpp"
#include "iscount/graph_io.hpp"
#include "iscount/oracle.hpp"

#include <doctest.h>

using namespace iscount;

TEST_SUITE("coloring") {

TEST_CASE("cover counts") {
    Graph k2 = testing::make(2, {{0, 1}});
    CHECK(k_cover_count(k2, 1) == 0);
    CHECK(k_cover_count(k2, 2) == 2);
    CHECK(k_cover_count(Graph(1), 1) == 1);
    auto all = cover_counts(petersen_graph(), 4);
    REQUIRE(all.size() == 5);
    for (int k = 0; k <= 4; ++k) CHECK(all[static_cast<std::size_t>(k)] == k_cover_count(petersen_graph(), k));
    CHECK(all[2] == 0);
    CHECK(all[3] > 0);
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(Graph()) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(cycle_graph(7)) == 3);
    CHECK(chromatic_number(cycle_graph(8)) == 2);
    CHECK(chromatic_number(petersen_graph()) == 3);
    for (int k = 1; k <= 6; ++k) CHECK(chromatic_number(complete_graph(k)) == k);
}

TEST_CASE("threads do not change the answer") {
    ColoringOptions many;
    many.threads = 4;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gnp_graph(10, 0.5, seed);
        int want = brute_force_chromatic(g);
        CHECK(chromatic_number(g) == want);
        CHECK(chromatic_number(g, many) == want);
    }
}

TEST_CASE("subsets above the mask threshold go through the solver") {
    // The whole vertex set of a 21-cycle is counted by the branch-and-reduce engine.
    ColoringOptions many;
    many.threads = 4;
    Graph c21 = cycle_graph(21);
    CHECK(k_cover_count(c21, 2, many) == 0);
    CHECK(k_cover_count(c21, 3, many) > 0);
}

TEST_CASE("size cap") {
    ColoringOptions small;
    small.cap = 8;
    CHECK_THROWS_AS(chromatic_number(cycle_graph(9), small), std::invalid_argument);
}

}
