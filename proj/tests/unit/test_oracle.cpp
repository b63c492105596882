#include "helpers.hpp"

#include "iscount/graph_io.hpp"
#include "iscount/oracle.hpp"

#include <doctest.h>

using namespace iscount;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("counts") {
    CHECK(brute_force_ind(petersen_graph()) == 76);
    CHECK(brute_force_ind(testing::disjoint_triangles()) == 16);
    CHECK(brute_force_ind(Graph()) == 1);
}

TEST_CASE("enumeration and meet in the middle agree") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = gnp_graph(14, 0.25, seed);
        Rng rng(seed);
        CardinalityFunction c(g.capacity());
        for (Vertex v : g.vertices()) c.set(v, static_cast<long>(rng.below(4)), static_cast<long>(rng.below(4)));
        CHECK(brute_force_ind_enumerate(g, c) == brute_force_ind_meet_in_middle(g, c));
    }
    CHECK_THROWS_AS(brute_force_ind(cycle_graph(31)), std::invalid_argument);
}

TEST_CASE("chromatic oracle") {
    CHECK(brute_force_chromatic(complete_graph(4)) == 4);
    CHECK(brute_force_chromatic(cycle_graph(5)) == 3);
    CHECK(brute_force_chromatic(petersen_graph()) == 3);
    CHECK(brute_force_chromatic(Graph()) == 0);
    CHECK_THROWS_AS(brute_force_chromatic(cycle_graph(17)), std::invalid_argument);
}

TEST_CASE("independence polynomial") {
    CHECK(independence_polynomial(complete_graph(3)) == ints({1, 3}));
    CHECK(independence_polynomial(cycle_graph(5)) == ints({1, 5, 5}));
    CHECK(independence_polynomial(Graph(3)) == ints({1, 3, 3, 1}));
}

}
