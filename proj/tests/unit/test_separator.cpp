#include "iscount/graph_io.hpp"
#include "iscount/separator.hpp"
#include "iscount/subcubic.hpp"

#include <doctest.h>

using namespace iscount;

TEST_SUITE("separator") {

TEST_CASE("path decompositions") {
    auto p5 = path_decomposition(path_graph(5));
    CHECK(is_valid_decomposition(path_graph(5), p5));
    CHECK(is_nice(p5));
    CHECK(p5.width() == 1);

    auto c6 = path_decomposition(cycle_graph(6));
    CHECK(is_valid_decomposition(cycle_graph(6), c6));
    CHECK(c6.width() == 2);

    Graph pet = petersen_graph();
    auto pd = path_decomposition(pet);
    CHECK(is_valid_decomposition(pet, pd));
    CHECK(is_nice(pd));

    PathDecomposition broken{{{0, 1}, {2}, {1, 2}}};
    CHECK(!is_valid_decomposition(path_graph(3), broken));
}

TEST_CASE("linear arrangement covers every vertex once") {
    Graph g = random_cubic_graph(30, 2);
    auto order = linear_arrangement(g);
    std::sort(order.begin(), order.end());
    CHECK(order == g.vertices());
}

TEST_CASE("balanced separations") {
    WeightSet w = WeightSet::subcubic_default();
    Graph one(1);
    CHECK(is_valid_separation(one, balanced_separation(one, w)));
    Separation a = Separation::all(one, Side::separator);
    CHECK(is_valid_separation(one, a));
    CHECK(is_valid_separation(one, Separation::all(one, Side::right)));

    Graph c6 = cycle_graph(6);
    Separation sep = balanced_separation(c6, w);
    CHECK(is_valid_separation(c6, sep));
    CHECK(sep.count(Side::separator) <= 3);
    CHECK(mu_r(c6, sep, Side::right, w) - mu_r(c6, sep, Side::left, w) == 0.0);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = random_subcubic_graph(60, 0.3, false, seed);
        Separation s = balanced_separation(g, w);
        CHECK(is_valid_separation(g, s));
        CHECK(mu_r(g, s, Side::left, w) <= mu_r(g, s, Side::right, w));
        CHECK(is_balanced(g, s, w));
    }
}

TEST_CASE("spider classification is consistent") {
    WeightSet w = WeightSet::subcubic_default();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_subcubic_graph(30, 0.4, true, seed);
        Separation s = balanced_separation(g, w);
        for (Vertex v : s.members(Side::separator)) {
            const auto& sp = s.spider(v);
            if (sp.kind == SpiderKind::none) continue;
            CHECK(g.degree(v) == 3);
            CHECK(has_neighbor_degrees_222(g, v));
            if (sp.kind == SpiderKind::center) {
                REQUIRE(sp.partner);
                const auto& other = s.spider(*sp.partner);
                CHECK(other.kind == SpiderKind::center);
                CHECK(other.weight_bearer != sp.weight_bearer);
            }
        }
    }
}

TEST_CASE("invalid separations are detected") {
    Graph p3 = path_graph(3);
    Separation s = Separation::all(p3, Side::left);
    s.assign(2, Side::right);
    CHECK(!is_valid_separation(p3, s));
    s.assign(1, Side::separator);
    CHECK(is_valid_separation(p3, s));
    s.assign(1, Side::left);
    s.assign(2, Side::separator);
    CHECK(is_valid_separation(p3, s));
}

}
