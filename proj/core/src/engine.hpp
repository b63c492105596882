#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/separation.hpp"
#include "iscount/solver.hpp"

#include <atomic>
#include <memory>

namespace iscount::detail {

struct WorkerPool {
    explicit WorkerPool(int threads) : spare(threads - 1) {}
    bool try_acquire() {
        int cur = spare.load();
        while (cur > 0)
            if (spare.compare_exchange_weak(cur, cur - 1)) return true;
        return false;
    }
    void release() { spare.fetch_add(1); }
    std::atomic<int> spare;
};

class Engine {
public:
    Engine(const SolverOptions& opt, SolveStats& stats, std::shared_ptr<WorkerPool> pool = nullptr);

    BigInt count(const Graph& g, const Separation& sep, const CardinalityFunction& c, int depth);
    BigInt three_is(const Graph& g, Separation sep, const CardinalityFunction& c, int depth);
    BigInt branch_on(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex v, int depth);

    Separation simplify(const Graph& g, Separation sep);

    const SolverOptions& options() const { return opt_; }
    SolveStats& stats() { return stats_; }

private:
    void enter(int depth) {
        if (depth > stats_.max_depth) stats_.max_depth = depth;
    }
    void hit(Rule r) { ++stats_.rule(r); }
    void check_separation(const Graph& g, const Separation& sep);
    BigInt apply_multiplier(const Graph& g, const Separation& sep, const CardinalityFunction& c, Vertex x,
                            std::span<const Vertex> side, int depth);

    // One spider step: either a new separation to continue with, or a vertex to branch on.
    struct SpiderStep {
        bool continue_with_separation = false;
        Separation separation;
        Vertex branch_vertex = -1;
    };
    SpiderStep spider_step(const Graph& g, const Separation& sep, Vertex s);
    friend BigInt spider_entry(Engine&, Vertex, const Graph&, const Separation&, const CardinalityFunction&);

    const SolverOptions& opt_;
    SolveStats& stats_;
    std::shared_ptr<WorkerPool> pool_;
};

BigInt spider_entry(Engine& e, Vertex s, const Graph& g, const Separation& sep, const CardinalityFunction& c);

// Moves s to `to`, dragging every arm of s that starts on the opposite side:
// interiors follow s, a degree-3 endpoint on the opposite side enters S, dead ends follow s.
void drag_across(const Graph& g, Separation& sep, Vertex s, Side to);

}  // namespace iscount::detail
