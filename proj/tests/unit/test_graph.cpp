#include "helpers.hpp"

#include "iscount/graph_io.hpp"
#include "iscount/skeleton.hpp"

#include <doctest.h>

#include <algorithm>

using namespace iscount;
using testing::make;

TEST_SUITE("graph-core") {

TEST_CASE("average degree") {
    CHECK(average_degree(complete_graph(4)) == 3);
    CHECK(average_degree(cycle_graph(5)) == 2);
    CHECK(average_degree(path_graph(4)) == Rational(3, 2));
    CHECK_THROWS(average_degree(Graph()));
}

TEST_CASE("degree sum and symmetry") {
    Graph g = gnp_graph(15, 0.4, 3);
    int sum = 0;
    for (Vertex v : g.vertices()) {
        sum += g.degree(v);
        for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(u, v));
    }
    CHECK(sum == 2 * g.edge_count());
    CHECK_NOTHROW(g.audit());
}

TEST_CASE("self-loops and duplicates are rejected") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
}

TEST_CASE("associated average degree") {
    Graph k4 = complete_graph(4);
    auto s = associated_average_degree(k4, 0, Rational(8, 3));
    CHECK(s.alpha == 3);
    CHECK(s.beta == 1);
    CHECK(s.score == 3);

    // neighbour degrees (2,2,3)
    Graph g = make(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 6}});
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(3) == 3);
    s = associated_average_degree(g, 0, Rational(8, 3));
    CHECK(s.alpha == 5);
    CHECK(s.beta == 2);
    CHECK(s.score == Rational(5, 2));

    // neighbour degrees (2,2,2)
    Graph h = make(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    s = associated_average_degree(h, 0, Rational(8, 3));
    CHECK(s.alpha == 6);
    CHECK(s.beta == Rational(5, 2));
    CHECK(s.score == Rational(12, 5));
}

TEST_CASE("skeleton") {
    // 0–1–2 with 0 and 2 of degree 3
    Graph g = make(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {3, 4}, {5, 6}, {3, 5}, {4, 6}});
    REQUIRE(g.degree(1) == 2);
    auto sk = skeleton(g);
    bool found = false;
    for (const auto& e : sk.edges)
        if (std::min(e.a, e.b) == 0 && std::max(e.a, e.b) == 2 && e.interior == std::vector<Vertex>{1}) found = true;
    CHECK(found);
    CHECK(sk.nodes.size() == 6);

    auto pet = skeleton(petersen_graph());
    CHECK(pet.nodes.size() == 10);
    CHECK(pet.edges.size() == 15);
    for (const auto& e : pet.edges) CHECK(e.interior.empty());

    auto c6 = skeleton(cycle_graph(6));
    CHECK(c6.nodes.empty());
    CHECK(c6.edges.empty());

    CHECK_THROWS_AS(skeleton(complete_graph(5)), std::invalid_argument);
}

TEST_CASE("arms") {
    Graph p5 = path_graph(5);
    Arm a = walk_arm(p5, 0, 1);
    CHECK(!a.end);
    CHECK(a.interior == std::vector<Vertex>{1, 2, 3, 4});
    Arm stopped = walk_arm(p5, 0, 1, [](Vertex v) { return v == 3; });
    CHECK(stopped.end == std::optional<Vertex>(3));
    CHECK(stopped.interior == std::vector<Vertex>{1, 2});
}

TEST_CASE("components") {
    CHECK(components(testing::disjoint_triangles()).size() == 2);
    for (const auto& c : components(testing::disjoint_triangles())) CHECK(c.size() == 3);
    CHECK(components(petersen_graph()).size() == 1);
    CHECK(components(Graph()).empty());
}

TEST_CASE("restriction keeps ids") {
    Graph k3 = complete_graph(3);
    Vertex one[1] = {2};
    Graph k2 = k3.restrict(one);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.capacity() == 3);
    CHECK(!k2.contains(2));

    Graph c5 = cycle_graph(5);
    auto closed = closed_neighborhood(c5, 0);
    Graph p2 = c5.restrict(closed);
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    Graph same = c5.restrict(std::span<const Vertex>{});
    CHECK(same == c5);
}

TEST_CASE("articulation points and bipartiteness") {
    Graph g = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(articulation_points(g) == std::vector<Vertex>{2, 3});
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK(!is_bipartite(cycle_graph(7)));
    CHECK(has_333_vertex(petersen_graph()));
    CHECK(!has_333_vertex(theta_graph(2, 2, 2)));
}

}
