#include "iscount/graph_io.hpp"
#include "iscount/measure.hpp"
#include "iscount/published_weights.hpp"

#include <doctest.h>

#include <cmath>

using namespace iscount;

TEST_SUITE("measure") {

TEST_CASE("branching numbers") {
    CHECK(branching_number({{1, 1}, ""}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(branching_number({{1, 2}, ""}) == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(branching_number({{1, 8}, ""}) < 1.2321);
    CHECK(branching_number({{3}, ""}) == 1.0);
    CHECK_THROWS_AS(branching_number({{1, 0}, ""}), std::domain_error);
    CHECK_THROWS_AS(branching_number({{1, -2}, ""}), std::domain_error);
    // componentwise larger vectors have smaller roots
    CHECK(branching_number({{2, 3}, ""}) < branching_number({{1, 3}, ""}));
    CHECK(branching_number({{2, 3}, ""}) < branching_number({{2, 2.5}, ""}));
}

TEST_CASE("default weights") {
    WeightSet w = WeightSet::subcubic_default();
    CHECK(w.r[0] == 0);
    CHECK(w.r[2] == 0);
    CHECK(w.r[3] == doctest::Approx(0.2));
    CHECK(w.s3p == doctest::Approx(0.7));
    CHECK(w.balance() == doctest::Approx(6 * w.s[3]));
    for (int i = 1; i < 4; ++i) {
        CHECK(w.r[i] >= w.r[i - 1]);
        CHECK(w.s[i] >= w.s[i - 1]);
    }
}

TEST_CASE("mu 8/3") {
    WeightSet w = WeightSet::subcubic_default();
    Graph empty;
    CHECK(measure_mu83(empty, Separation(), w).total == 0.0);

    Graph g = random_cubic_graph(12, 4);
    Separation sep = Separation::all(g, Side::right);
    sep.assign(0, Side::separator);
    sep.assign(1, Side::separator);
    auto rep = measure_mu83(g, sep, w);
    const double b = w.balance();
    const double expect = 2 * w.s[3] + 10 * w.r[3] + (b - 1.0) +
                          (1 + b) * std::log(10 * w.r[3] + 2 * w.s[3]) / std::log(1 + w.epsilon);
    CHECK(rep.total == doctest::Approx(expect).epsilon(1e-12));

    Separation swapped = sep;
    swapped.swap_sides();
    CHECK(measure_mu83(g, swapped, w).total == doctest::Approx(rep.total).epsilon(1e-12));
}

TEST_CASE("general measure") {
    WeightSet w;
    w.w[2] = 0.1146078;
    w.w[4] = 0.2713302;
    w.psi = -0.01;
    CHECK(measure_general(cycle_graph(6), w) == doctest::Approx(6 * 0.1146078));
    CHECK(measure_general(complete_graph(5), w) == doctest::Approx(5 * 0.2713302));

    Graph spokes = parse_edge_list("5 8\n0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(!has_degree4_potential(spokes));
    // two degree-4 hubs joined by four 2-paths
    Graph pot = parse_edge_list("6 8\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n");
    REQUIRE(has_degree4_potential(pot));
    CHECK(measure_general(pot, w, true) == doctest::Approx(measure_general(pot, w) + w.psi));
    CHECK(measure_general(complete_graph(8), w) == 8.0);
}

TEST_CASE("mu 8/3 upper bound") {
    WeightSet w = WeightSet::subcubic_default();
    CHECK(mu83_upper_bound(2, w) == doctest::Approx(w.r[2] / 2));
    const double x = 28.0 / 11;
    const double left = (x - 2) / 6 * w.s3p + 0.5 * (5.0 / 6 * (x - 2) * w.r[3] + (3 - x) * w.r[2]);
    CHECK(mu83_upper_bound(Rational(28, 11), w) == doctest::Approx(left).epsilon(1e-12));
    CHECK(mu83_upper_bound(Rational(8, 3), w) ==
          doctest::Approx(w.s[3] / 9 + 0.5 * (5.0 / 9 * w.r[3] + w.r[2] / 3)).epsilon(1e-12));
    // maximal at 8/3 under the linking inequalities
    for (int i = 0; i <= 40; ++i) {
        Rational d = Rational(2) + Rational(2 * i, 3 * 40);
        CHECK(mu83_upper_bound(d, w) <= mu83_upper_bound(Rational(8, 3), w) + 1e-12);
    }
    CHECK_THROWS_AS(mu83_upper_bound(3, w), std::domain_error);
}

TEST_CASE("outgoing edges of high-degree vertices") {
    CHECK(NeighborProfile::of({2, 2, 2, 2, 2}).out_v == 5);
    CHECK(NeighborProfile::of({2, 2, 2, 2, 2, 3}).out_v == 5);
    CHECK(NeighborProfile::of({2, 2, 2, 2, 3}).out_v == 4);
    CHECK(NeighborProfile::of({2, 2, 2, 3, 3}).out_v == 3);
    NeighborProfile p;
    p.d_v = 4;
    p.neighbor_degrees = {2, 2, 2, 2};
    CHECK_THROWS_AS(out_lower_bound(p), std::domain_error);
}

}
