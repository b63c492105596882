#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

using iscount::cli::run_cli;
using json = nlohmann::json;

namespace {

const std::string data = ISCOUNT_TEST_DATA;

struct Run {
    int status;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

// Strings and integers must match exactly, floating values to a relative 1e-9.
bool same(const json& a, const json& b) {
    if (a.is_number_float() || b.is_number_float()) {
        if (!a.is_number() || !b.is_number()) return false;
        double x = a.get<double>(), y = b.get<double>();
        return std::fabs(x - y) <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
    }
    if (a.type() != b.type()) return false;
    if (a.is_object()) {
        if (a.size() != b.size()) return false;
        for (auto it = a.begin(); it != a.end(); ++it)
            if (!b.contains(it.key()) || !same(it.value(), b.at(it.key()))) return false;
        return true;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!same(a[i], b[i])) return false;
        return true;
    }
    return a == b;
}

// Set ISCOUNT_UPDATE_GOLDEN=1 to rewrite the stored reports.
void check_golden(const std::string& name, const std::vector<std::string>& args, int status) {
    Run r = run(args);
    CHECK(r.status == status);
    const std::string path = data + "/golden/" + name + ".json";
    if (std::getenv("ISCOUNT_UPDATE_GOLDEN")) {
        std::ofstream(path) << r.out;
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in, "missing golden file " << path);
    json want = json::parse(in);
    CHECK_MESSAGE(same(r.report(), want), name << " differs from its golden report:\n" << r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden reports") {
    const std::string fx = data + "/fixtures/";
    check_golden("count_petersen_gen", {"count", "--gen", "petersen", "--seq"}, 0);
    check_golden("count_petersen_file", {"count", fx + "petersen.dimacs", "--seq"}, 0);
    check_golden("count_theta_plain", {"count", fx + "theta.edges", "--seq", "--no-three-is"}, 0);
    check_golden("count_weighted_cycle", {"count", "--gen", "cycle(7)", "--weights", fx + "cycle7.card", "--seq"}, 0);
    check_golden("chromatic_cycle7", {"chromatic", "--gen", "cycle(7)", "--seq"}, 0);
    check_golden("chromatic_petersen", {"chromatic", fx + "petersen.dimacs", "--seq"}, 0);
    check_golden("verify_gnp", {"verify", "--gen", "gnp(14,0.3)", "--seed", "3", "--seq"}, 0);
    check_golden("weights_subcubic_verify", {"weights", "subcubic-8/3", "--verify-only"}, 0);
    check_golden("weights_subcubic_long", {"weights", "subcubic-8/3", "--verify-only", "--weights", fx + "subcubic_long.weights"}, 1);
    check_golden("weights_degree4_verify", {"weights", "degree-4", "--verify-only"}, 1);
    check_golden("weights_degree4_loose", {"weights", "degree-4", "--verify-only", "--tolerance", "1e-6"}, 0);
    check_golden("weights_degree3", {"weights", "degree-3"}, 0);
    check_golden("weights_degree56", {"weights", "degree-5-6"}, 0);
    check_golden("bench_cubic", {"bench", "--family", "random-cubic", "--n", "10..20", "--seeds", "2", "--seq"}, 0);
}

TEST_CASE("values") {
    auto r = run({"count", "--gen", "petersen", "--seq"});
    CHECK(r.status == 0);
    CHECK(r.report()["count"] == "76");
    CHECK(!r.report().contains("wall_time_ms"));
    CHECK(run({"count", "--gen", "petersen"}).report().contains("wall_time_ms"));
    CHECK(run({"chromatic", "--gen", "cycle(7)", "--seq"}).report()["chi"] == 3);
    // counts are decimal strings of any size
    auto big = run({"count", "--gen", "empty(80)", "--seq"});
    CHECK(big.report()["count"] == "1208925819614629174706176");
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"count"}).status == 2);
    CHECK(run({"count", "a.txt", "--gen", "petersen"}).status == 2);
    CHECK(run({"count", "/nonexistent/file"}).status == 2);
    CHECK(run({"count", data + "/fixtures/broken.dimacs"}).status == 2);
    CHECK(run({"count", "--gen", "nonsense(4)"}).status == 2);
    CHECK(run({"weights", "degree-9"}).status == 2);
    CHECK(run({"verify", "--gen", "cycle(40)"}).status == 2);
    CHECK(run({"bench", "--n", "x..y"}).status == 2);
    Run r = run({"count", "--bogus"});
    CHECK(r.status == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("sequential runs are repeatable") {
    for (const auto& spec : {"petersen", "random-cubic(24,5)", "gnp(14,0.4,2)"}) {
        auto a = run({"count", "--gen", spec, "--seq"});
        auto b = run({"count", "--gen", spec, "--seq"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("slope fit") {
    CHECK(iscount::cli::fit_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
    CHECK(iscount::cli::fit_slope({1, 1}, {2, 4}) == 0.0);
}

}
