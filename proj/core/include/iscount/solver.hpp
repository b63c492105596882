#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/measure.hpp"
#include "iscount/separation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace iscount {

enum class Rule : int {
    empty,
    single_vertex,
    max_degree_2,
    components,
    degree4_path,
    multiplier,
    lazy_separator,
    dispatch_three_is,
    branch,
    three_is_handback,
    three_is_new_separation,
    three_is_swap,
    three_is_fallback_branch,
    three_is_multiplier,
    three_is_lazy_separator,
    three_is_imbalanced_drag,
    three_is_imbalanced_neighbor_branch,
    three_is_branch,
    drag_guard,
    simplify_no_left,
    simplify_no_right,
    simplify_balanced_drag,
    simplify_imbalanced_drag,
    simplify_no_left_skeleton,
    simplify_no_right_skeleton,
    spider_pull_right,
    spider_pull_left,
    spider_center_drag,
    spider_branch_left_neighbor,
    spider_branch,
    count_
};

inline constexpr int rule_count = static_cast<int>(Rule::count_);
std::string_view rule_name(Rule r);

struct AuditCounters {
    std::uint64_t separator_violations = 0;
    std::uint64_t anchor_violations = 0;
    std::uint64_t simplify_bound_violations = 0;
    std::uint64_t branch_333_in_three_is = 0;
    std::uint64_t simplify_calls = 0;
    std::uint64_t max_simplify_firings = 0;
    std::uint64_t checks = 0;

    std::uint64_t violations() const {
        return separator_violations + anchor_violations + simplify_bound_violations + branch_333_in_three_is;
    }
};

struct SolveStats {
    std::uint64_t branch_nodes = 0;
    int max_depth = 0;
    std::uint64_t separator_recomputations = 0;
    std::uint64_t separator_size_total = 0;
    int max_separator_size = 0;
    std::array<std::uint64_t, rule_count> rules{};
    AuditCounters audit;

    std::uint64_t& rule(Rule r) { return rules[static_cast<int>(r)]; }
    std::uint64_t rule(Rule r) const { return rules[static_cast<int>(r)]; }
    void merge(const SolveStats& other);
};

struct SolverOptions {
    WeightSet weights = WeightSet::subcubic_default();
    bool enable_three_is = true;
    bool audit = false;
    int threads = 1;          // 1 keeps everything on the calling thread
    int parallel_depth = 12;  // fork only this close to the root
    int lazy_radius = 4;
};

struct SolveResult {
    BigInt count;
    SolveStats stats;
};

SolveResult count_independent_sets(const Graph& g, const CardinalityFunction& c, const SolverOptions& opt = {});
SolveResult count_independent_sets(const Graph& g, const SolverOptions& opt = {});

// c_out(v)·ind(G − v) + c_in(v)·Π_{u ∈ N(v)} c_out(u)·ind(G − N[v]).
BigInt branch_on(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex v,
                 const SolverOptions& opt = {});

// Degree-4 special rule vertex, or the maximum-degree vertex with the largest
// α/β score (smallest id on ties).
Vertex select_branch_vertex(const Graph& g);
std::optional<Vertex> degree4_rule_vertex(const Graph& g);
Vertex max_score_vertex(const Graph& g, std::span<const Vertex> pool);

// Worker count from ISCOUNT_THREADS, else the hardware concurrency.
int default_thread_count();

}  // namespace iscount
