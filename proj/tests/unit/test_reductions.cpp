#include "helpers.hpp"

#include "iscount/graph_io.hpp"
#include "iscount/oracle.hpp"
#include "iscount/reductions.hpp"
#include "iscount/solver.hpp"

#include <doctest.h>

using namespace iscount;
using testing::make;

TEST_SUITE("reductions") {

TEST_CASE("max degree 2 closed forms") {
    CardinalityFunction unit;
    Graph one(1);
    CardinalityFunction c(1);
    c.set(0, 2, 3);
    CHECK(solve_max_degree_2(one, c) == 5);
    CHECK(solve_max_degree_2(path_graph(3), unit) == 5);
    CHECK(solve_max_degree_2(cycle_graph(5), unit) == 11);
    CHECK_THROWS_AS(solve_max_degree_2(complete_graph(4), unit), std::invalid_argument);

    // weighted paths and cycles against the oracle
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        Graph g = seed % 2 ? path_graph(3 + static_cast<int>(seed % 9)) : cycle_graph(3 + static_cast<int>(seed % 9));
        CardinalityFunction w(g.capacity());
        for (Vertex v : g.vertices()) w.set(v, static_cast<long>(rng.below(6)), static_cast<long>(rng.below(6)));
        CHECK(solve_max_degree_2(g, w) == brute_force_ind(g, w));
    }
}

TEST_CASE("multiplier reduction on a triangle with a pendant") {
    // a = 0, b = 1, x = 2, y = 3
    Graph g = make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CardinalityFunction c = CardinalityFunction::unit(g);
    Vertex side[2] = {0, 1};
    auto r = multiplier_reduction(g, Separation::all(g, Side::right), c, 2, side);
    CHECK(r.cardinality.out(2) == 3);
    CHECK(r.cardinality.in(2) == 1);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(count_independent_sets(r.graph, r.cardinality).count == 7);
    CHECK(brute_force_ind(g) == 7);
}

TEST_CASE("pendant fold") {
    Graph g = make(3, {{0, 1}, {1, 2}});
    CardinalityFunction c(3);
    c.set(0, 2, 5);
    c.set(1, 3, 7);
    Vertex side[1] = {0};
    auto r = multiplier_reduction(g, Separation::all(g, Side::right), c, 1, side);
    CHECK(r.cardinality.out(1) == 3 * (2 + 5));
    CHECK(r.cardinality.in(1) == 7 * 2);
    CHECK(count_independent_sets(r.graph, r.cardinality).count == brute_force_ind(g, c));
}

TEST_CASE("empty side is the identity") {
    Graph g = petersen_graph();
    auto r = multiplier_reduction(g, Separation::all(g, Side::right), CardinalityFunction::unit(g), 0, {});
    CHECK(r.graph == g);
    CHECK(count_independent_sets(r.graph, r.cardinality).count == 76);
}

TEST_CASE("multiplier reduction rejects bad sides") {
    Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}});
    Vertex side[1] = {3};
    CHECK_THROWS_AS(multiplier_reduction(g, Separation::all(g, Side::right), CardinalityFunction::unit(g), 1, side),
                    std::invalid_argument);
}

TEST_CASE("finding multiplier candidates") {
    WeightSet w = WeightSet::subcubic_default();
    CHECK(!find_multiplier_reduction(petersen_graph(), w));
    Graph g = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    auto hit = find_multiplier_reduction(g, w);
    REQUIRE(hit);
    CHECK(hit->x == 2);
}

TEST_CASE("lazy 2-separators") {
    WeightSet w = WeightSet::subcubic_default();
    Graph theta = theta_graph(2, 2, 2);
    std::vector<Vertex> hubs;
    Vertex interior = -1;
    for (Vertex v : theta.vertices()) {
        if (theta.degree(v) == 3) hubs.push_back(v);
        else interior = v;
    }
    REQUIRE(hubs.size() == 2);
    auto hit = find_lazy_2_separator(theta, interior, w);
    REQUIRE(hit);
    CHECK(std::minmax(hit->y, hit->z) == std::minmax(hubs[0], hubs[1]));

    CHECK(!find_lazy_2_separator(complete_graph(4), 0, w));
    CHECK(!find_lazy_2_separator(path_graph(6), 2, w));
}

}
