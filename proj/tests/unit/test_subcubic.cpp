#include "helpers.hpp"

#include "iscount/graph_io.hpp"
#include "iscount/oracle.hpp"
#include "iscount/separator.hpp"
#include "iscount/subcubic.hpp"

#include <doctest.h>

#include <map>

using namespace iscount;

namespace {

struct Subdivided {
    Graph g;
    Separation sep;
};

// Subdivides every base edge except those in `keep`, then places base vertex i on
// sides[i]. A subdivision vertex follows its non-separator endpoint and sits in S
// when its endpoints lie on opposite sides.
Subdivided subdivide(int n, const std::vector<Edge>& edges, const std::vector<Side>& sides,
                     const std::vector<Edge>& keep = {}) {
    std::vector<Edge> out;
    std::vector<Side> side = sides;
    int next = n;
    for (auto [u, v] : edges) {
        if (std::find(keep.begin(), keep.end(), Edge{u, v}) != keep.end()) {
            out.push_back({u, v});
            continue;
        }
        Side a = sides[static_cast<std::size_t>(u)], b = sides[static_cast<std::size_t>(v)];
        Side s = a == Side::separator ? b : (b == Side::separator || a == b ? a : Side::separator);
        out.push_back({u, next});
        out.push_back({next, v});
        side.push_back(s);
        ++next;
    }
    Subdivided r{Graph::from_edges(next, out), {}};
    r.sep = Separation::all(r.g, Side::left);
    for (Vertex v = 0; v < next; ++v) r.sep.assign(v, side[static_cast<std::size_t>(v)]);
    return r;
}

const std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const std::vector<Edge> prism = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
constexpr Side L = Side::left, S = Side::separator, R = Side::right;

Separation random_separation(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    Separation sep = Separation::all(g, Side::right);
    for (Vertex v : g.vertices()) sep.assign(v, rng.chance(0.5) ? Side::left : Side::right);
    for (auto [u, v] : g.edges())
        if ((sep.in(u, Side::left) && sep.in(v, Side::right)) || (sep.in(u, Side::right) && sep.in(v, Side::left)))
            sep.assign(rng.chance(0.5) ? u : v, Side::separator);
    return sep;
}

}  // namespace

TEST_SUITE("subcubic") {

TEST_CASE("left spider") {
    auto inst = subdivide(4, k4, {S, L, L, R});
    REQUIRE(is_valid_separation(inst.g, inst.sep));
    auto cls = classify_spider(inst.g, inst.sep, 0);
    CHECK(cls.kind == SpiderKind::left);
    CHECK(cls.weight_bearer);
    CHECK(spider(0, inst.g, inst.sep, CardinalityFunction::unit(inst.g)) == brute_force_ind(inst.g));
}

TEST_CASE("right neighbour without the 2,2,2 profile") {
    auto inst = subdivide(6, prism, {S, L, L, R, R, R}, {{3, 4}});
    REQUIRE(is_valid_separation(inst.g, inst.sep));
    CHECK(has_neighbor_degrees_222(inst.g, 0));
    CHECK(!has_neighbor_degrees_222(inst.g, 3));
    CHECK(classify_spider(inst.g, inst.sep, 0).kind == SpiderKind::none);
}

TEST_CASE("center pair") {
    auto inst = subdivide(6, prism, {S, L, R, S, L, R});
    REQUIRE(is_valid_separation(inst.g, inst.sep));
    classify_spiders(inst.g, inst.sep);
    const auto& a = inst.sep.spider(0);
    const auto& b = inst.sep.spider(3);
    CHECK(a.kind == SpiderKind::center);
    CHECK(b.kind == SpiderKind::center);
    CHECK(a.partner == std::optional<Vertex>(3));
    CHECK(b.partner == std::optional<Vertex>(0));
    CHECK(a.weight_bearer != b.weight_bearer);
    SolverOptions opt;
    opt.audit = true;
    SolveStats stats;
    CHECK(spider(0, inst.g, inst.sep, CardinalityFunction::unit(inst.g), opt, &stats) == brute_force_ind(inst.g));
    CHECK(stats.audit.violations() == 0);
}

TEST_CASE("spider requires a 2,2,2 separator vertex") {
    Graph pet = petersen_graph();
    Separation sep = Separation::all(pet, Side::separator);
    CHECK_THROWS_AS(spider(0, pet, sep, CardinalityFunction::unit(pet)), std::invalid_argument);
}

TEST_CASE("skeleton neighbours") {
    auto inst = subdivide(4, k4, {S, L, L, R});
    CHECK(skeleton_neighbors(inst.g, 0) == std::vector<Vertex>{1, 2, 3});
    CHECK(skeleton_neighbors(inst.g, 0, inst.sep, Side::left) == std::vector<Vertex>{1, 2});
    CHECK(skeleton_links(inst.g, 0).size() == 3);
    for (const auto& link : skeleton_links(inst.g, 0)) CHECK(link.path.size() == 1);
}

TEST_CASE("simplify moves a separator vertex without left neighbours") {
    Graph g = testing::make(4, {{0, 1}, {1, 2}, {2, 3}});
    Separation sep = Separation::all(g, Side::right);
    sep.assign(1, Side::separator);
    SimplifyTrace trace;
    Separation out = simplify(g, sep, WeightSet::subcubic_default(), &trace);
    CHECK(!trace.fired.empty());
    CHECK(trace.fired.front() == Rule::simplify_no_left);
    CHECK(out.in(1, Side::right));
    CHECK(is_valid_separation(g, out));
}

TEST_CASE("simplify postconditions") {
    WeightSet w = WeightSet::subcubic_default();
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_subcubic_graph(8 + 2 * static_cast<int>(seed % 5), 0.3, true, seed);
        Separation start = seed % 2 ? random_separation(g, seed) : balanced_separation(g, w);
        SimplifyTrace trace;
        Separation out = simplify(g, start, w, &trace);
        CHECK(is_valid_separation(g, out));
        CHECK(skeleton_anchored(g, out));
        const auto n = static_cast<std::size_t>(g.vertex_count());
        CHECK(trace.fired.size() <= n * n);
        for (Vertex s : out.members(Side::separator)) CHECK(g.degree(s) == 3);
    }
}

TEST_CASE("three_is against the oracle and the plain engine") {
    SolverOptions opt;
    opt.audit = true;
    SolverOptions plain;
    plain.enable_three_is = false;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_subcubic_graph(6 + 2 * static_cast<int>(seed % 4), 0.35, true, seed);
        CardinalityFunction c = CardinalityFunction::unit(g);
        BigInt want = brute_force_ind(g);
        CHECK(count_independent_sets(g, plain).count == want);
        for (std::uint64_t k = 0; k < 3; ++k) {
            SolveStats stats;
            CHECK(three_is(g, random_separation(g, seed * 10 + k), c, opt, &stats) == want);
            CHECK(stats.audit.violations() == 0);
        }
    }
}

TEST_CASE("three_is rejects invalid instances") {
    Graph pet = petersen_graph();
    CardinalityFunction c = CardinalityFunction::unit(pet);
    CHECK_THROWS_AS(three_is(pet, Separation::all(pet, Side::right), c), std::invalid_argument);
    Graph k5 = complete_graph(5);
    CHECK_THROWS_AS(three_is(k5, Separation::all(k5, Side::right), CardinalityFunction::unit(k5)),
                    std::invalid_argument);
    Graph p3 = path_graph(3);
    Separation bad = Separation::all(p3, Side::left);
    bad.assign(2, Side::right);
    CHECK_THROWS_AS(three_is(p3, bad, CardinalityFunction::unit(p3)), std::invalid_argument);
}

TEST_CASE("disconnected instances hand back to the component rule") {
    Graph g = testing::disjoint_triangles();
    SolveStats stats;
    CHECK(three_is(g, Separation::all(g, Side::right), CardinalityFunction::unit(g), {}, &stats) == 16);
}

}
