#include "cli.hpp"

#include "iscount/coloring.hpp"
#include "iscount/graph_io.hpp"
#include "iscount/optimizer.hpp"
#include "iscount/oracle.hpp"
#include "iscount/published_weights.hpp"
#include "iscount/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace iscount::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    Graph graph;
    json descriptor;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input load_input(const std::string& file, const std::string& gen, std::uint64_t seed) {
    if (file.empty() == gen.empty()) throw UsageError("give exactly one of <file> or --gen <spec>");
    Input in;
    if (!gen.empty()) {
        try {
            in.graph = generate(parse_graph_spec(gen, seed));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        in.descriptor = {{"source", "generator"}, {"spec", gen}, {"seed", seed}};
    } else {
        in.graph = parse_graph(slurp(file));
        in.descriptor = {{"source", "file"}, {"path", file}};
    }
    in.descriptor["n"] = in.graph.vertex_count();
    in.descriptor["m"] = in.graph.edge_count();
    return in;
}

// One "v c_out c_in" triple per line, vertices 1-based.
CardinalityFunction read_cardinality(const std::string& path, const Graph& g) {
    CardinalityFunction c = CardinalityFunction::unit(g);
    std::istringstream lines(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v;
        std::string out, in;
        if (!(ls >> v)) continue;
        if (!(ls >> out >> in)) throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'v c_out c_in'");
        if (v < 1 || v > g.capacity() || !g.contains(static_cast<Vertex>(v - 1)))
            throw UsageError(path + ":" + std::to_string(lineno) + ": vertex out of range");
        BigInt bo, bi;
        if (bo.set_str(out, 10) != 0 || bi.set_str(in, 10) != 0 || bo < 0 || bi < 0)
            throw UsageError(path + ":" + std::to_string(lineno) + ": weights must be non-negative integers");
        c.set(static_cast<Vertex>(v - 1), bo, bi);
    }
    return c;
}

// key=value lines; '#' starts a comment.
WeightTable read_weight_table(const std::string& path) {
    WeightTable t;
    std::istringstream lines(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   line.end());
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        try {
            std::size_t used = 0;
            double value = std::stod(line.substr(eq + 1), &used);
            if (used != line.size() - eq - 1) throw std::invalid_argument("trailing text");
            t[line.substr(0, eq)] = value;
        } catch (const std::logic_error&) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": bad number");
        }
    }
    return t;
}

json stats_json(const SolveStats& s) {
    json rules = json::object();
    for (int i = 0; i < rule_count; ++i)
        if (s.rules[static_cast<std::size_t>(i)])
            rules[std::string(rule_name(static_cast<Rule>(i)))] = s.rules[static_cast<std::size_t>(i)];
    json out = {{"branch_nodes", s.branch_nodes},
                {"max_depth", s.max_depth},
                {"separator_recomputations", s.separator_recomputations},
                {"max_separator_size", s.max_separator_size}};
    out["mean_separator_size"] =
        s.separator_recomputations ? static_cast<double>(s.separator_size_total) / s.separator_recomputations : 0.0;
    out["rules"] = rules;
    if (s.audit.checks) {
        out["audit"] = {{"checks", s.audit.checks},
                        {"separator_violations", s.audit.separator_violations},
                        {"anchor_violations", s.audit.anchor_violations},
                        {"simplify_bound_violations", s.audit.simplify_bound_violations},
                        {"branch_333_in_three_is", s.audit.branch_333_in_three_is},
                        {"max_simplify_firings", s.audit.max_simplify_firings}};
    }
    return out;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json verify_json(const VerifyReport& rep) {
    json v = json::array();
    for (const auto& c : rep.violations())
        v.push_back({{"label", c.label}, {"kind", c.branching ? "branching" : "linear"}, {"slack", c.slack}});
    return {{"ok", rep.ok()},
            {"tolerance", rep.tolerance},
            {"checked", rep.checks.size()},
            {"worst_slack", rep.worst_slack()},
            {"violations", v}};
}

json table_json(const WeightTable& t) {
    json out = json::object();
    for (const auto& [k, v] : t) out[k] = v;
    return out;
}

struct Common {
    std::string file, gen;
    std::uint64_t seed = 1;
    bool seq = false;
    int threads = 0;

    void attach(CLI::App* app) {
        app->add_option("file", file, "DIMACS or edge-list graph file");
        app->add_option("--gen", gen, "generator spec, e.g. petersen, cycle(7), gnp(12,0.3)");
        app->add_option("--seed", seed, "seed for random generators");
        app->add_flag("--seq", seq, "single-threaded, deterministic report without timings");
        app->add_option("--threads", threads, "worker count (default: ISCOUNT_THREADS or hardware)");
    }
    int workers() const { return seq ? 1 : (threads > 0 ? threads : default_thread_count()); }
};

int cmd_count(const Common& o, const std::string& weights, bool no_three_is, std::ostream& out) {
    Input in = load_input(o.file, o.gen, o.seed);
    CardinalityFunction c = weights.empty() ? CardinalityFunction::unit(in.graph) : read_cardinality(weights, in.graph);
    SolverOptions opt;
    opt.threads = o.workers();
    opt.enable_three_is = !no_three_is;
    auto t0 = Clock::now();
    auto res = count_independent_sets(in.graph, c, opt);
    json report = {{"command", "count"}, {"input", in.descriptor}, {"weighted", !weights.empty()},
                   {"count", res.count.get_str()}, {"stats", stats_json(res.stats)}};
    if (!o.seq) report["wall_time_ms"] = ms_since(t0);
    out << report.dump(2) << "\n";
    return exit_ok;
}

int cmd_chromatic(const Common& o, std::ostream& out) {
    Input in = load_input(o.file, o.gen, o.seed);
    ColoringOptions opt;
    opt.threads = o.workers();
    auto t0 = Clock::now();
    int chi;
    try {
        chi = chromatic_number(in.graph, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json report = {{"command", "chromatic"}, {"input", in.descriptor}, {"chi", chi}};
    if (!o.seq) report["wall_time_ms"] = ms_since(t0);
    out << report.dump(2) << "\n";
    return exit_ok;
}

int cmd_verify(const Common& o, std::ostream& out) {
    Input in = load_input(o.file, o.gen, o.seed);
    if (in.graph.vertex_count() > 30) throw UsageError("the oracle accepts at most 30 vertices");
    SolverOptions opt;
    opt.threads = o.workers();
    opt.audit = true;
    auto res = count_independent_sets(in.graph, opt);
    BigInt oracle = brute_force_ind(in.graph);
    bool match = res.count == oracle && res.stats.audit.violations() == 0;
    json report = {{"command", "verify"}, {"input", in.descriptor}, {"count", res.count.get_str()},
                   {"oracle", oracle.get_str()}};
    if (in.graph.max_degree() <= 3 && !has_333_vertex(in.graph)) {
        SolverOptions plain = opt;
        plain.enable_three_is = false;
        auto alt = count_independent_sets(in.graph, plain);
        report["without_three_is"] = alt.count.get_str();
        match = match && alt.count == oracle;
    }
    report["audit_violations"] = res.stats.audit.violations();
    report["match"] = match;
    out << report.dump(2) << "\n";
    return match ? exit_ok : exit_mismatch;
}

int cmd_weights(const std::string& regime_text, bool verify_only, const std::string& file, double tolerance,
                bool list_constraints, std::ostream& out) {
    auto regime = parse_regime(regime_text);
    if (!regime) throw UsageError("unknown regime '" + regime_text + "'");
    json report = {{"command", "weights"}, {"regime", std::string(regime_name(*regime))}};

    WeightTable candidate = published::table(*regime);
    std::string source = "published";
    if (!file.empty()) {
        for (const auto& [k, v] : read_weight_table(file)) candidate[k] = v;
        source = file;
    }
    const ConstraintSystem cs = generate_constraints(*regime, published::context(*regime));
    report["constraints"] = cs.size();
    if (list_constraints) {
        json lines = json::array();
        std::istringstream text(cs.to_text());
        for (std::string line; std::getline(text, line);) lines.push_back(line);
        report["constraint_list"] = lines;
    }
    VerifyReport given;
    try {
        given = verify_weights(cs, candidate, tolerance);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    report["weights_source"] = source;
    report["verification"] = verify_json(given);

    if (!verify_only) {
        auto chain = optimize_chain();
        const auto& step = *std::find_if(chain.begin(), chain.end(), [&](const ChainResult& c) { return c.regime == *regime; });
        auto targets = published::stage_targets(*regime);
        json stages = json::array();
        for (std::size_t i = 0; i < step.result.stages.size(); ++i) {
            const auto& s = step.result.stages[i];
            json j = {{"label", s.label}, {"objective", s.objective}, {"base", s.base}};
            if (i < targets.size()) {
                j["published"] = targets[i];
                j["difference"] = s.objective - targets[i];
            }
            stages.push_back(j);
        }
        auto own = verify_weights(generate_constraints(*regime, step.context), step.result.weights, tolerance);
        report["optimized"] = {{"stages", stages}, {"weights", table_json(step.result.weights)},
                               {"verification", verify_json(own)}};
        out << report.dump(2) << "\n";
        return own.ok() ? exit_ok : exit_mismatch;
    }
    out << report.dump(2) << "\n";
    return given.ok() ? exit_ok : exit_mismatch;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw UsageError("--n expects a..b");
    }
}

int cmd_bench(const std::string& family, const std::string& range, int step, std::uint64_t seed, int seeds,
              bool seq, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi < lo || step < 1 || seeds < 1) throw UsageError("bad --n, --step or --seeds");
    if (family != "random-cubic" && family != "random-subcubic" && family != "no333")
        throw UsageError("unknown family '" + family + "'");
    json rows = json::array();
    std::vector<double> xs, ys;
    for (int n = lo; n <= hi; n += step) {
        for (int k = 0; k < seeds; ++k) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
            Graph g;
            int size = n;
            if (family == "random-cubic") {
                size = n + (n & 1);  // cubic graphs need an even order
                g = random_cubic_graph(size, s);
            } else {
                g = random_subcubic_graph(n, 0.3, family == "no333", s);
            }
            SolverOptions opt;
            opt.threads = 1;
            auto t0 = Clock::now();
            auto res = count_independent_sets(g, opt);
            json row = {{"n", g.vertex_count()}, {"seed", s}, {"branch_nodes", res.stats.branch_nodes},
                        {"count", res.count.get_str()}};
            if (!seq) row["wall_time_ms"] = ms_since(t0);
            rows.push_back(row);
            xs.push_back(g.vertex_count());
            ys.push_back(std::log2(std::max<double>(1.0, static_cast<double>(res.stats.branch_nodes))));
        }
    }
    const double slope = xs.size() > 1 ? fit_slope(xs, ys) : 0.0;
    json report = {{"command", "bench"}, {"family", family}, {"rows", rows}, {"log2_nodes_slope", slope},
                   {"base", std::exp2(slope)}};
    out << report.dump(2) << "\n";
    return exit_ok;
}

}  // namespace

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double den = n * sxx - sx * sx;
    return den == 0 ? 0.0 : (n * sxy - sx * sy) / den;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting of independent sets, chromatic numbers and measure weights", "iscount"};
    app.require_subcommand(1);

    Common count_opts, chrom_opts, verify_opts;
    std::string count_weights;
    bool no_three_is = false;
    auto* count = app.add_subcommand("count", "count independent sets");
    count_opts.attach(count);
    count->add_option("--weights", count_weights, "file of 'v c_out c_in' lines (1-based)");
    count->add_flag("--no-three-is", no_three_is, "disable the subcubic #3IS engine");

    auto* chrom = app.add_subcommand("chromatic", "chromatic number by inclusion-exclusion");
    chrom_opts.attach(chrom);

    auto* verify = app.add_subcommand("verify", "compare the solver with the brute-force oracle");
    verify_opts.attach(verify);

    std::string regime, weight_file;
    bool verify_only = false, list_constraints = false;
    double tolerance = 1e-9;
    auto* weights = app.add_subcommand("weights", "generate, verify and optimise measure weights");
    weights->add_option("regime", regime, "subcubic-8/3, degree-3, degree-4 or degree-5-6")->required();
    weights->add_flag("--verify-only", verify_only, "only check the weights against the constraints");
    weights->add_option("--weights", weight_file, "key=value overrides of the published weights");
    weights->add_option("--tolerance", tolerance, "slack tolerance");
    weights->add_flag("--constraints", list_constraints, "include the generated constraints");

    std::string family = "random-cubic", range;
    int step = 5, seeds = 1;
    std::uint64_t bench_seed = 1;
    bool bench_seq = false;
    auto* bench = app.add_subcommand("bench", "branch-node scaling table");
    bench->add_option("--family", family, "random-cubic, random-subcubic or no333");
    bench->add_option("--n", range, "vertex range a..b")->required();
    bench->add_option("--step", step, "stride through the range");
    bench->add_option("--seed", bench_seed, "first seed");
    bench->add_option("--seeds", seeds, "seeds per size");
    bench->add_flag("--seq", bench_seq, "omit timings");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*count) return cmd_count(count_opts, count_weights, no_three_is, out);
        if (*chrom) return cmd_chromatic(chrom_opts, out);
        if (*verify) return cmd_verify(verify_opts, out);
        if (*weights) return cmd_weights(regime, verify_only, weight_file, tolerance, list_constraints, out);
        if (*bench) return cmd_bench(family, range, step, bench_seed, seeds, bench_seq, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
    return exit_usage;
}

}  // namespace iscount::cli
