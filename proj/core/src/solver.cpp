#include "iscount/solver.hpp"

#include "engine.hpp"
#include "iscount/reductions.hpp"
#include "iscount/skeleton.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

namespace iscount {

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::empty: return "empty";
        case Rule::single_vertex: return "single_vertex";
        case Rule::max_degree_2: return "max_degree_2";
        case Rule::components: return "components";
        case Rule::degree4_path: return "degree4_path";
        case Rule::multiplier: return "multiplier";
        case Rule::lazy_separator: return "lazy_separator";
        case Rule::dispatch_three_is: return "dispatch_three_is";
        case Rule::branch: return "branch";
        case Rule::three_is_handback: return "three_is_handback";
        case Rule::three_is_new_separation: return "three_is_new_separation";
        case Rule::three_is_swap: return "three_is_swap";
        case Rule::three_is_fallback_branch: return "three_is_fallback_branch";
        case Rule::three_is_multiplier: return "three_is_multiplier";
        case Rule::three_is_lazy_separator: return "three_is_lazy_separator";
        case Rule::three_is_imbalanced_drag: return "three_is_imbalanced_drag";
        case Rule::three_is_imbalanced_neighbor_branch: return "three_is_imbalanced_neighbor_branch";
        case Rule::three_is_branch: return "three_is_branch";
        case Rule::drag_guard: return "drag_guard";
        case Rule::simplify_no_left: return "simplify_no_left";
        case Rule::simplify_no_right: return "simplify_no_right";
        case Rule::simplify_balanced_drag: return "simplify_balanced_drag";
        case Rule::simplify_imbalanced_drag: return "simplify_imbalanced_drag";
        case Rule::simplify_no_left_skeleton: return "simplify_no_left_skeleton";
        case Rule::simplify_no_right_skeleton: return "simplify_no_right_skeleton";
        case Rule::spider_pull_right: return "spider_pull_right";
        case Rule::spider_pull_left: return "spider_pull_left";
        case Rule::spider_center_drag: return "spider_center_drag";
        case Rule::spider_branch_left_neighbor: return "spider_branch_left_neighbor";
        case Rule::spider_branch: return "spider_branch";
        case Rule::count_: break;
    }
    return "unknown";
}

void SolveStats::merge(const SolveStats& o) {
    branch_nodes += o.branch_nodes;
    max_depth = std::max(max_depth, o.max_depth);
    separator_recomputations += o.separator_recomputations;
    separator_size_total += o.separator_size_total;
    max_separator_size = std::max(max_separator_size, o.max_separator_size);
    for (int i = 0; i < rule_count; ++i) rules[i] += o.rules[i];
    audit.separator_violations += o.audit.separator_violations;
    audit.anchor_violations += o.audit.anchor_violations;
    audit.simplify_bound_violations += o.audit.simplify_bound_violations;
    audit.branch_333_in_three_is += o.audit.branch_333_in_three_is;
    audit.simplify_calls += o.audit.simplify_calls;
    audit.max_simplify_firings = std::max(audit.max_simplify_firings, o.audit.max_simplify_firings);
    audit.checks += o.audit.checks;
}

std::optional<Vertex> degree4_rule_vertex(const Graph& g) {
    if (g.max_degree() != 4) return std::nullopt;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 4) continue;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) != 2) return std::nullopt;
    }
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 4) continue;
        for (const Arm& arm : arms(g, v))
            if (arm.end && g.degree(*arm.end) == 3) return v;
    }
    return std::nullopt;
}

Vertex max_score_vertex(const Graph& g, std::span<const Vertex> pool) {
    const Rational k = average_degree(g);
    Vertex best = -1;
    Rational best_score;
    for (Vertex v : pool) {
        auto s = associated_average_degree(g, v, k);
        if (best < 0 || s.score > best_score) {
            best = v;
            best_score = s.score;
        }
    }
    return best;
}

namespace {

std::vector<Vertex> max_degree_vertices(const Graph& g) {
    const int d = g.max_degree();
    std::vector<Vertex> out;
    for (Vertex v : g.vertices())
        if (g.degree(v) == d) out.push_back(v);
    return out;
}

}  // namespace

Vertex select_branch_vertex(const Graph& g) {
    if (auto v = degree4_rule_vertex(g)) return *v;
    auto pool = max_degree_vertices(g);
    return max_score_vertex(g, pool);
}

int default_thread_count() {
    if (const char* env = std::getenv("ISCOUNT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

Engine::Engine(const SolverOptions& opt, SolveStats& stats, std::shared_ptr<WorkerPool> pool)
    : opt_(opt), stats_(stats), pool_(std::move(pool)) {}

void Engine::check_separation(const Graph& g, const Separation& sep) {
    if (!opt_.audit) return;
    ++stats_.audit.checks;
    if (!is_valid_separation(g, sep)) ++stats_.audit.separator_violations;
}

BigInt Engine::count(const Graph& g, const Separation& sep, const CardinalityFunction& c, int depth) {
    enter(depth);
    check_separation(g, sep);
    const int n = g.vertex_count();
    if (n == 0) {
        hit(Rule::empty);
        return 1;
    }
    if (n == 1) {
        hit(Rule::single_vertex);
        Vertex x = g.vertices().front();
        return c.in(x) + c.out(x);
    }
    if (g.max_degree() <= 2) {
        hit(Rule::max_degree_2);
        return solve_max_degree_2(g, c);
    }
    auto parts = components(g);
    if (parts.size() > 1) {
        hit(Rule::components);
        BigInt total = 1;
        for (const auto& part : parts) {
            Graph h = g.induced(part);
            total *= count(h, Separation::all(h, Side::right), c, depth + 1);
            if (total == 0) break;
        }
        return total;
    }
    if (auto x4 = degree4_rule_vertex(g)) {
        hit(Rule::degree4_path);
        return branch_on(g, sep, c, *x4, depth);
    }
    auto pool = max_degree_vertices(g);
    const Vertex x = max_score_vertex(g, pool);
    const WeightSet& w = opt_.weights;
    if (auto mr = find_multiplier_reduction(g, w)) {
        hit(Rule::multiplier);
        return apply_multiplier(g, sep, c, mr->x, mr->side, depth);
    }
    if (auto lazy = find_lazy_2_separator(g, x, w, opt_.lazy_radius)) {
        hit(Rule::lazy_separator);
        return branch_on(g, sep, c, lazy->y, depth);
    }
    if (opt_.enable_three_is && g.max_degree() == 3 && !has_333_vertex(g)) {
        hit(Rule::dispatch_three_is);
        return three_is(g, sep, c, depth + 1);
    }
    hit(Rule::branch);
    return branch_on(g, sep, c, x, depth);
}

BigInt Engine::apply_multiplier(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex x,
                                std::span<const Vertex> side, int depth) {
    SubSolver sub = [&](const Graph& h, const CardinalityFunction& cc) {
        return count(h, Separation::all(h, Side::right), cc, depth + 1);
    };
    auto reduced = multiplier_reduction(g, sep, c, x, side, opt_.weights, sub);
    return count(reduced.graph, reduced.separation, reduced.cardinality, depth + 1);
}

BigInt Engine::branch_on(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex v,
                         int depth) {
    ++stats_.branch_nodes;
    BigInt in_factor = c.in(v);
    for (Vertex u : g.neighbors(v)) in_factor *= c.out(u);
    const BigInt& out_factor = c.out(v);

    Vertex only[1] = {v};
    Graph g_out = g.restrict(only);
    Separation sep_out = sep.restricted(g_out);
    auto closed = closed_neighborhood(g, v);
    Graph g_in = g.restrict(closed);
    Separation sep_in = sep.restricted(g_in);

    BigInt out_value = 0, in_value = 0;
    const bool need_out = out_factor != 0;
    const bool need_in = in_factor != 0;
    if (need_out && need_in && pool_ && depth < opt_.parallel_depth && pool_->try_acquire()) {
        SolveStats child;
        auto fut = std::async(std::launch::async, [&] {
            Engine e(opt_, child, pool_);
            return e.count(g_out, sep_out, c, depth + 1);
        });
        try {
            in_value = count(g_in, sep_in, c, depth + 1);
        } catch (...) {
            fut.wait();
            pool_->release();
            throw;
        }
        out_value = fut.get();
        pool_->release();
        stats_.merge(child);
    } else {
        if (need_out) out_value = count(g_out, sep_out, c, depth + 1);
        if (need_in) in_value = count(g_in, sep_in, c, depth + 1);
    }
    return out_factor * out_value + in_factor * in_value;
}

}  // namespace detail

SolveResult count_independent_sets(const Graph& g, const CardinalityFunction& c, const SolverOptions& opt) {
    SolveResult res;
    std::shared_ptr<detail::WorkerPool> pool;
    if (opt.threads > 1) pool = std::make_shared<detail::WorkerPool>(opt.threads);
    detail::Engine engine(opt, res.stats, pool);
    res.count = engine.count(g, Separation::all(g, Side::right), c, 0);
    return res;
}

SolveResult count_independent_sets(const Graph& g, const SolverOptions& opt) {
    return count_independent_sets(g, CardinalityFunction::unit(g), opt);
}

BigInt branch_on(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex v,
                 const SolverOptions& opt) {
    if (!g.contains(v)) throw std::invalid_argument("branch vertex is not in the graph");
    SolveStats stats;
    detail::Engine engine(opt, stats);
    return engine.branch_on(g, sep, c, v, 0);
}

}  // namespace iscount
