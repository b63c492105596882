#include "iscount/graph_io.hpp"

#include <doctest.h>

using namespace iscount;

TEST_SUITE("graph-io") {

TEST_CASE("dimacs") {
    Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3 == complete_graph(3));

    try {
        parse_dimacs("p edge 2 1\ne 1 1\n");
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::self_loop);
        CHECK(e.line() == 2);
    }
    try {
        parse_dimacs("p edge 4 2\ne 1 2\n");
        FAIL("edge count mismatch accepted");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::edge_count_mismatch);
    }
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
}

TEST_CASE("edge list and format detection") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(p3 == path_graph(3));
    CHECK(parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n") == path_graph(3));
    CHECK(parse_graph("# comment\n3 2\n0 1\n1 2\n") == path_graph(3));
}

TEST_CASE("dimacs round trip") {
    Graph g = gnp_graph(12, 0.3, 5);
    CHECK(parse_dimacs(to_dimacs(g)) == g);
}

TEST_CASE("generators") {
    Graph pet = generate(parse_graph_spec("petersen"));
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (Vertex v : pet.vertices()) CHECK(pet.degree(v) == 3);

    CHECK(generate(parse_graph_spec("cycle(5)")) == cycle_graph(5));
    CHECK(random_cubic_graph(20, 7) == random_cubic_graph(20, 7));
    Graph cubic = random_cubic_graph(20, 7);
    for (Vertex v : cubic.vertices()) CHECK(cubic.degree(v) == 3);
    CHECK_THROWS_AS(random_cubic_graph(7, 1), std::invalid_argument);

    Graph sub = random_subcubic_graph(20, 0.4, true, 3);
    CHECK(sub.max_degree() <= 3);
    CHECK(!has_333_vertex(sub));

    CHECK(generate(parse_graph_spec("gnp(12,0.3,9)")) == gnp_graph(12, 0.3, 9));
    CHECK_THROWS_AS(parse_graph_spec("nonsense(3)"), std::invalid_argument);
}

}
