#include "helpers.hpp"

#include "iscount/graph_io.hpp"
#include "iscount/oracle.hpp"
#include "iscount/solver.hpp"

#include <doctest.h>

using namespace iscount;
using testing::make;

TEST_SUITE("solver") {

TEST_CASE("small fixtures") {
    for (int n = 1; n <= 8; ++n) CHECK(count_independent_sets(complete_graph(n)).count == n + 1);
    CHECK(count_independent_sets(petersen_graph()).count == 76);
    CHECK(count_independent_sets(testing::disjoint_triangles()).count == 16);
    CHECK(count_independent_sets(Graph()).count == 1);
}

TEST_CASE("single vertex with cardinalities") {
    Graph one(1);
    CardinalityFunction c(1);
    c.set(0, 2, 3);
    CHECK(count_independent_sets(one, c).count == 5);
}

TEST_CASE("branching on a vertex") {
    Graph edge = make(2, {{0, 1}});
    CardinalityFunction unit = CardinalityFunction::unit(edge);
    CHECK(branch_on(edge, Separation::all(edge, Side::right), unit, 0) == 3);
    CardinalityFunction c(2);
    c.set(0, 1, 5);
    CHECK(branch_on(edge, Separation::all(edge, Side::right), c, 0) == 7);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gnp_graph(12, 0.3, seed);
        Vertex v = g.vertices()[seed % g.vertices().size()];
        CHECK(branch_on(g, Separation::all(g, Side::right), CardinalityFunction::unit(g), v) ==
              count_independent_sets(g).count);
    }
    CHECK_THROWS_AS(branch_on(edge, Separation::all(edge, Side::right), unit, 7), std::invalid_argument);
}

TEST_CASE("branch vertex selection") {
    // a unique degree-5 vertex wins
    Graph star = make(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {3, 6}});
    CHECK(select_branch_vertex(star) == 0);

    // the larger α/β score wins, ties go to the smaller id
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_subcubic_graph(12, 0.4, false, seed);
        std::vector<Vertex> pool;
        for (Vertex v : g.vertices())
            if (g.degree(v) == g.max_degree()) pool.push_back(v);
        const Rational k = average_degree(g);
        Vertex best = max_score_vertex(g, pool);
        for (Vertex v : pool) {
            auto sv = associated_average_degree(g, v, k);
            auto sb = associated_average_degree(g, best, k);
            CHECK(sb.score >= sv.score);
            if (sv.score == sb.score) CHECK(best <= v);
        }
    }
}

TEST_CASE("degree-4 rule takes precedence") {
    // hub 0 has four degree-2 neighbours; its arm through 1 ends at the degree-3 vertex 5
    Graph g = make(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 5}});
    REQUIRE(g.max_degree() == 4);
    REQUIRE(g.degree(9) == 3);
    REQUIRE(g.degree(5) == 3);
    auto v = degree4_rule_vertex(g);
    REQUIRE(v);
    CHECK(*v == 0);
    CHECK(select_branch_vertex(g) == 0);
    CHECK(!degree4_rule_vertex(complete_graph(5)));
}

TEST_CASE("engines agree with the oracle") {
    SolverOptions audit;
    audit.audit = true;
    SolverOptions plain;
    plain.enable_three_is = false;
    SolverOptions threaded;
    threaded.threads = 4;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = seed % 3 == 0 ? gnp_graph(8 + static_cast<int>(seed % 9), 0.3, seed)
                  : seed % 3 == 1 ? random_subcubic_graph(8 + 2 * static_cast<int>(seed % 4), 0.3, true, seed)
                                  : random_cubic_graph(10 + 2 * static_cast<int>(seed % 4), seed);
        BigInt want = brute_force_ind(g);
        auto r = count_independent_sets(g, audit);
        CHECK(r.count == want);
        CHECK(r.stats.audit.violations() == 0);
        CHECK(r.stats.max_depth <= 3 * g.vertex_count());
        CHECK(count_independent_sets(g, plain).count == want);
        CHECK(count_independent_sets(g, threaded).count == want);
    }
}

TEST_CASE("weighted counts") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gnp_graph(10, 0.35, seed);
        Rng rng(seed * 7);
        CardinalityFunction c(g.capacity());
        for (Vertex v : g.vertices()) c.set(v, static_cast<long>(rng.below(6)), static_cast<long>(rng.below(6)));
        CHECK(count_independent_sets(g, c).count == brute_force_ind(g, c));
    }
}

TEST_CASE("thread count from the environment") {
    CHECK(default_thread_count() >= 1);
}

}
