#include "iscount/subcubic.hpp"

#include "engine.hpp"
#include "iscount/reductions.hpp"
#include "iscount/separator.hpp"
#include "iscount/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace iscount {

std::vector<SkeletonLink> skeleton_links(const Graph& g, Vertex v) {
    std::vector<SkeletonLink> out;
    for (Arm& arm : arms(g, v)) {
        if (!arm.end || arm.returns || g.degree(*arm.end) < 3) continue;
        out.push_back({*arm.end, std::move(arm.interior)});
    }
    return out;
}

std::vector<Vertex> skeleton_neighbors(const Graph& g, Vertex v) {
    std::vector<Vertex> out;
    for (const auto& link : skeleton_links(g, v)) out.push_back(link.to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> skeleton_neighbors(const Graph& g, Vertex v, const Separation& sep, Side side) {
    auto all = skeleton_neighbors(g, v);
    std::erase_if(all, [&](Vertex u) { return !sep.in(u, side); });
    return all;
}

bool has_neighbor_degrees_222(const Graph& g, Vertex v) {
    if (g.degree(v) != 3) return false;
    for (Vertex u : g.neighbors(v))
        if (g.degree(u) != 2) return false;
    return true;
}

SpiderClassification classify_spider(const Graph& g, const Separation& sep, Vertex s) {
    SpiderClassification none;
    if (!sep.in(s, Side::separator) || !has_neighbor_degrees_222(g, s)) return none;
    auto nl = skeleton_neighbors(g, s, sep, Side::left);
    auto nr = skeleton_neighbors(g, s, sep, Side::right);
    auto ns = skeleton_neighbors(g, s, sep, Side::separator);
    if (nl.size() == 2 && nr.size() == 1 && has_neighbor_degrees_222(g, nr[0]))
        return {SpiderKind::left, std::nullopt, true};
    if (nr.size() == 2 && nl.size() == 1 && has_neighbor_degrees_222(g, nl[0]))
        return {SpiderKind::right, std::nullopt, true};
    if (nl.size() == 1 && nr.size() == 1 && ns.size() == 1 && has_neighbor_degrees_222(g, ns[0]))
        return {SpiderKind::center, ns[0], s < ns[0]};
    return none;
}

void classify_spiders(const Graph& g, Separation& sep) {
    sep.clear_spiders();
    for (Vertex s : sep.members(Side::separator)) {
        if (sep.spider(s).kind == SpiderKind::center) continue;  // already set by its partner
        auto cls = classify_spider(g, sep, s);
        if (cls.kind == SpiderKind::none) continue;
        sep.set_spider(s, cls);
        if (cls.kind == SpiderKind::center) {
            Vertex p = *cls.partner;
            sep.set_spider(p, {SpiderKind::center, s, !cls.weight_bearer});
        }
    }
    sep.mark_classified();
}

bool skeleton_anchored(const Graph& g, const Separation& sep) {
    auto anchored = [&](Vertex s, Side side) {
        for (Vertex u : skeleton_neighbors(g, s, sep, side))
            if (!skeleton_neighbors(g, u, sep, side).empty()) return true;
        return false;
    };
    for (Vertex s : sep.members(Side::separator)) {
        if (g.degree(s) != 3) return false;
        if (!anchored(s, Side::left) || !anchored(s, Side::right)) return false;
    }
    return true;
}

namespace {

bool has_neighbor_on(const Graph& g, const Separation& sep, Vertex v, Side side) {
    for (Vertex u : g.neighbors(v))
        if (sep.in(u, side)) return true;
    return false;
}

int neighbors_on(const Graph& g, const Separation& sep, Vertex v, Side side) {
    int k = 0;
    for (Vertex u : g.neighbors(v)) k += sep.in(u, side);
    return k;
}

// No l ∈ N_Γ(s) on `side` that itself has a skeleton neighbour on `side`.
bool unanchored(const Graph& g, const Separation& sep, Vertex s, Side side) {
    for (Vertex u : skeleton_neighbors(g, s, sep, side))
        if (!skeleton_neighbors(g, u, sep, side).empty()) return false;
    return true;
}

// The set-C drag: s, its 2-paths and its skeleton neighbours on `from` go to the
// other side, together with the separator vertices those neighbours reach once
// they no longer touch `from`.
void drag_unanchored(const Graph& g, Separation& sep, Vertex s, Side from) {
    const Side to = opposite(from);
    std::vector<Vertex> movers{s};
    std::vector<Vertex> reached;
    for (const Arm& arm : arms(g, s)) {
        movers.insert(movers.end(), arm.interior.begin(), arm.interior.end());
        if (!arm.end || arm.returns || !sep.in(*arm.end, from)) continue;
        Vertex l = *arm.end;
        movers.push_back(l);
        for (const Arm& back : arms(g, l)) {
            movers.insert(movers.end(), back.interior.begin(), back.interior.end());
            if (back.end && *back.end != s && sep.in(*back.end, Side::separator)) reached.push_back(*back.end);
        }
    }
    for (Vertex v : movers) sep.assign(v, to);
    for (Vertex a : reached)
        if (sep.in(a, Side::separator) && !has_neighbor_on(g, sep, a, from)) sep.assign(a, to);
}

}  // namespace

namespace detail {

void drag_across(const Graph& g, Separation& sep, Vertex s, Side to) {
    const Side from = opposite(to);
    auto stop = [&](Vertex v) { return sep.in(v, Side::separator); };
    for (const Arm& arm : arms(g, s, stop)) {
        if (!sep.in(arm.first, from)) continue;
        for (Vertex v : arm.interior) sep.assign(v, to);
        if (arm.end && !arm.returns && sep.in(*arm.end, from)) sep.assign(*arm.end, Side::separator);
    }
    sep.assign(s, to);
}

Separation simplify_impl(const Graph& g, Separation sep, const WeightSet& w, SimplifyTrace* trace,
                         AuditCounters* audit) {
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t limit = std::max<std::uint64_t>(1, n * n);
    std::uint64_t firings = 0;
    auto fire = [&](Rule r) {
        ++firings;
        if (trace) trace->fired.push_back(r);
        if (audit) {
            ++audit->checks;
            if (!is_valid_separation(g, sep)) ++audit->separator_violations;
        }
    };

    while (firings <= limit) {
        const auto sset = sep.members(Side::separator);
        bool fired = false;
        for (Vertex s : sset)
            if (!has_neighbor_on(g, sep, s, Side::left)) {
                sep.assign(s, Side::right);
                fire(Rule::simplify_no_left);
                fired = true;
                break;
            }
        if (fired) continue;
        for (Vertex s : sset)
            if (!has_neighbor_on(g, sep, s, Side::right)) {
                sep.assign(s, Side::left);
                fire(Rule::simplify_no_right);
                fired = true;
                break;
            }
        if (fired) continue;
        for (Vertex s : sset) {
            if (g.degree(s) != 2) continue;
            const bool balanced = is_balanced(g, sep, w);
            const Side toward = balanced ? Side::left : Side::right;
            const Side dest = opposite(toward);
            Vertex first = -1;
            for (Vertex u : g.neighbors(s))
                if (sep.in(u, toward)) first = u;
            Arm arm = walk_arm(g, s, first, [&](Vertex v) { return sep.in(v, Side::separator); });
            for (Vertex v : arm.interior) sep.assign(v, dest);
            if (arm.end && !arm.returns) sep.assign(*arm.end, Side::separator);
            sep.assign(s, dest);
            fire(balanced ? Rule::simplify_balanced_drag : Rule::simplify_imbalanced_drag);
            fired = true;
            break;
        }
        if (fired) continue;
        for (Vertex s : sset)
            if (unanchored(g, sep, s, Side::left)) {
                drag_unanchored(g, sep, s, Side::left);
                fire(Rule::simplify_no_left_skeleton);
                fired = true;
                break;
            }
        if (fired) continue;
        for (Vertex s : sset)
            if (unanchored(g, sep, s, Side::right)) {
                drag_unanchored(g, sep, s, Side::right);
                fire(Rule::simplify_no_right_skeleton);
                fired = true;
                break;
            }
        if (!fired) break;
    }

    if (audit) {
        ++audit->simplify_calls;
        audit->max_simplify_firings = std::max(audit->max_simplify_firings, firings);
        if (firings > limit) ++audit->simplify_bound_violations;
        if (!skeleton_anchored(g, sep)) ++audit->anchor_violations;
    }
    return sep;
}

Separation Engine::simplify(const Graph& g, Separation sep) {
    SimplifyTrace trace;
    AuditCounters* audit = opt_.audit ? &stats_.audit : nullptr;
    sep = simplify_impl(g, std::move(sep), opt_.weights, &trace, audit);
    for (Rule r : trace.fired) hit(r);
    return sep;
}

Engine::SpiderStep Engine::spider_step(const Graph& g, const Separation& sep, Vertex s) {
    SpiderStep step;
    step.separation = sep;
    Separation& cur = step.separation;
    auto nl = skeleton_neighbors(g, s, sep, Side::left);
    auto nr = skeleton_neighbors(g, s, sep, Side::right);
    auto ns = skeleton_neighbors(g, s, sep, Side::separator);

    if (neighbors_on(g, sep, s, Side::right) == 1 && nr.size() == 1 && !has_neighbor_degrees_222(g, nr[0])) {
        hit(Rule::spider_pull_right);
        drag_across(g, cur, s, Side::left);
        step.continue_with_separation = true;
        return step;
    }
    if (neighbors_on(g, sep, s, Side::left) == 1 && nl.size() == 1 && !has_neighbor_degrees_222(g, nl[0])) {
        hit(Rule::spider_pull_left);
        drag_across(g, cur, s, Side::right);
        step.continue_with_separation = true;
        return step;
    }
    if (ns.size() == 1 && nl.size() == 1) {
        const Vertex l = nl[0];
        for (Vertex si : skeleton_neighbors(g, l)) {
            if (si == s || !cur.in(si, Side::separator)) continue;
            if (neighbors_on(g, cur, si, Side::right) != 1) continue;
            Vertex ri = -1;
            for (Vertex u : g.neighbors(si))
                if (cur.in(u, Side::right)) ri = u;
            cur.assign(si, Side::left);
            cur.assign(ri, Side::separator);
            hit(Rule::spider_center_drag);
        }
        hit(Rule::spider_branch_left_neighbor);
        step.branch_vertex = l;
        return step;
    }
    hit(Rule::spider_branch);
    step.branch_vertex = s;
    return step;
}

BigInt spider_entry(Engine& e, Vertex s, const Graph& g, const Separation& sep, const CardinalityFunction& c) {
    auto step = e.spider_step(g, sep, s);
    e.check_separation(g, step.separation);
    if (step.continue_with_separation) return e.three_is(g, step.separation, c, 1);
    return e.branch_on(g, step.separation, c, step.branch_vertex, 0);
}

BigInt Engine::three_is(const Graph& g, Separation sep, const CardinalityFunction& c, int depth) {
    enter(depth);
    if (g.max_degree() > 3 || has_333_vertex(g)) throw std::invalid_argument("not a valid #3IS instance");
    const int n = g.vertex_count();
    if (n <= 2 || g.max_degree() <= 2 || !is_connected(g)) {
        hit(Rule::three_is_handback);
        return count(g, sep, c, depth + 1);
    }
    const WeightSet& w = opt_.weights;
    auto branch = [&](const Separation& at, Vertex v) {
        if (opt_.audit && is_333_vertex(g, v)) ++stats_.audit.branch_333_in_three_is;
        return branch_on(g, at, c, v, depth);
    };

    int budget = 2 * n + 8;
    while (true) {
        bool fresh = false;
        if (sep.separator_empty()) {
            hit(Rule::three_is_new_separation);
            sep = balanced_separation(g, w);
            fresh = true;
            const int size = sep.count(Side::separator);
            ++stats_.separator_recomputations;
            stats_.separator_size_total += size;
            stats_.max_separator_size = std::max(stats_.max_separator_size, size);
            check_separation(g, sep);
        }
        if (mu_r(g, sep, Side::left, w) > mu_r(g, sep, Side::right, w)) {
            hit(Rule::three_is_swap);
            sep.swap_sides();
        }
        sep = simplify(g, std::move(sep));
        if (sep.separator_empty()) {
            if (!fresh && budget-- > 0) continue;
            hit(Rule::three_is_fallback_branch);
            return branch(sep, select_branch_vertex(g));
        }
        classify_spiders(g, sep);

        std::vector<Vertex> top;
        int best_degree = 0;
        for (Vertex v : sep.members(Side::separator)) best_degree = std::max(best_degree, g.degree(v));
        for (Vertex v : sep.members(Side::separator))
            if (g.degree(v) == best_degree) top.push_back(v);
        const Vertex s = max_score_vertex(g, top);

        if (auto mr = find_multiplier_reduction(g, w)) {
            hit(Rule::three_is_multiplier);
            return apply_multiplier(g, sep, c, mr->x, mr->side, depth);
        }
        if (auto lazy = find_lazy_2_separator(g, s, w, opt_.lazy_radius)) {
            hit(Rule::three_is_lazy_separator);
            return branch(sep, lazy->y);
        }
        const bool balanced = is_balanced(g, sep, w);
        if (balanced && has_neighbor_degrees_222(g, s)) {
            auto step = spider_step(g, sep, s);
            check_separation(g, step.separation);
            if (!step.continue_with_separation) return branch(step.separation, step.branch_vertex);
            if (budget-- <= 0) {
                hit(Rule::drag_guard);
                return branch(sep, s);
            }
            sep = std::move(step.separation);
            continue;
        }
        if (!balanced && neighbors_on(g, sep, s, Side::left) == 2 && neighbors_on(g, sep, s, Side::right) == 1) {
            if (budget-- <= 0) {
                hit(Rule::drag_guard);
                return branch(sep, s);
            }
            hit(Rule::three_is_imbalanced_drag);
            drag_across(g, sep, s, Side::left);
            check_separation(g, sep);
            continue;
        }
        if (!balanced) {
            auto nr = skeleton_neighbors(g, s, sep, Side::right);
            if (nr.size() >= 2) {
                std::vector<Vertex> lonely;
                for (Vertex r : nr)
                    if (skeleton_neighbors(g, r, sep, Side::right).empty()) lonely.push_back(r);
                if (!lonely.empty()) {
                    Vertex pick = -1;
                    if (lonely.size() == 1) {
                        for (Vertex r : nr)
                            if (r != lonely[0]) pick = r;
                    } else {
                        std::size_t best = 0;
                        for (Vertex r : nr) {
                            std::size_t d = skeleton_neighbors(g, r).size();
                            if (pick < 0 || d > best) {
                                pick = r;
                                best = d;
                            }
                        }
                    }
                    hit(Rule::three_is_imbalanced_neighbor_branch);
                    return branch(sep, pick);
                }
            }
        }
        hit(Rule::three_is_branch);
        return branch(sep, s);
    }
}

}  // namespace detail

Separation simplify(const Graph& g, Separation sep, const WeightSet& w, SimplifyTrace* trace) {
    if (g.max_degree() > 3) throw std::invalid_argument("not subcubic");
    return detail::simplify_impl(g, std::move(sep), w, trace, nullptr);
}

BigInt three_is(const Graph& g, const Separation& sep, const CardinalityFunction& c, const SolverOptions& opt,
                SolveStats* stats) {
    if (g.max_degree() > 3 || has_333_vertex(g) || !is_valid_separation(g, sep))
        throw std::invalid_argument("not a valid #3IS instance");
    SolveStats local;
    detail::Engine engine(opt, stats ? *stats : local);
    return engine.three_is(g, sep, c, 0);
}

BigInt spider(Vertex s, const Graph& g, const Separation& sep, const CardinalityFunction& c,
              const SolverOptions& opt, SolveStats* stats) {
    if (!g.contains(s) || !sep.in(s, Side::separator) || !has_neighbor_degrees_222(g, s) ||
        g.max_degree() > 3 || !is_valid_separation(g, sep))
        throw std::invalid_argument("spider needs a separator vertex with neighbour degrees (2,2,2)");
    SolveStats local;
    detail::Engine engine(opt, stats ? *stats : local);
    return detail::spider_entry(engine, s, g, sep, c);
}

}  // namespace iscount
