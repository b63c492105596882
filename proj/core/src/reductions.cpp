#include "iscount/reductions.hpp"

#include "iscount/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace iscount {

namespace {

// Vertices of a path or cycle component in walking order, starting at an end when there is one.
std::vector<Vertex> walk_component(const Graph& g, const std::vector<Vertex>& comp) {
    Vertex start = comp.front();
    for (Vertex v : comp)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<Vertex> order{start};
    Vertex prev = -1, cur = start;
    while (true) {
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        if (next < 0 || next == start) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace

BigInt solve_max_degree_2(const Graph& g, const CardinalityFunction& c) {
    if (g.max_degree() > 2) throw std::invalid_argument("solve_max_degree_2 needs maximum degree 2");
    BigInt total = 1;
    for (const auto& comp : components(g)) {
        auto order = walk_component(g, comp);
        const bool cycle = g.degree(order.front()) == 2;
        const Vertex v0 = order.front();
        auto run = [&](BigInt out, BigInt in) {
            for (std::size_t i = 1; i < order.size(); ++i) {
                Vertex v = order[i];
                BigInt next_out = (out + in) * c.out(v);
                in = out * c.in(v);
                out = std::move(next_out);
            }
            return std::pair{out, in};
        };
        if (!cycle) {
            auto [out, in] = run(c.out(v0), c.in(v0));
            total *= out + in;
        } else {
            auto [out_a, in_a] = run(c.out(v0), 0);
            auto [out_b, in_b] = run(0, c.in(v0));
            (void)in_b;
            total *= out_a + in_a + out_b;
        }
    }
    return total;
}

double induced_measure(const Graph& g, std::span<const Vertex> part, const WeightSet& w) {
    std::vector<std::uint8_t> mark(g.capacity(), 0);
    for (Vertex v : part) mark[v] = 1;
    double total = 0.0;
    for (Vertex v : part) {
        int d = 0;
        for (Vertex u : g.neighbors(v)) d += mark[u];
        total += w.r_of(d);
    }
    return total;
}

std::optional<MultiplierCandidate> find_multiplier_reduction(const Graph& g, const WeightSet& w) {
    const double b = w.balance();
    for (Vertex x : articulation_points(g)) {
        Vertex drop[1] = {x};
        auto parts = components(g.restrict(drop));
        std::optional<MultiplierCandidate> best;
        for (auto& part : parts) {
            part.push_back(x);
            bool small = induced_measure(g, part, w) <= b + 1e-12;
            part.pop_back();
            if (!small) continue;
            if (!best || part.size() < best->side.size()) best = MultiplierCandidate{x, part};
        }
        if (best) return best;
    }
    return std::nullopt;
}

ReducedInstance multiplier_reduction(const Graph& g, const Separation& sep, const CardinalityFunction& c,
                                     Vertex x, std::span<const Vertex> side, const WeightSet& w,
                                     const SubSolver& solve) {
    if (!g.contains(x)) throw std::invalid_argument("multiplier reduction: x is not a vertex");
    std::vector<std::uint8_t> in_side(g.capacity(), 0);
    for (Vertex v : side) {
        if (!g.contains(v) || v == x) throw std::invalid_argument("multiplier reduction: bad side vertex");
        in_side[v] = 1;
    }
    for (Vertex v : side)
        for (Vertex u : g.neighbors(v))
            if (!in_side[u] && u != x)
                throw std::invalid_argument("multiplier reduction: side is not cut off by x");
    std::vector<Vertex> part(side.begin(), side.end());
    part.push_back(x);
    if (induced_measure(g, part, w) > w.balance() + 1e-12)
        throw std::invalid_argument("multiplier reduction: side measure exceeds B");

    SubSolver count = solve ? solve : [](const Graph& h, const CardinalityFunction& cc) {
        return count_independent_sets(h, cc).count;
    };
    Graph g1 = g.induced(part);
    Vertex only_x[1] = {x};
    BigInt out_factor = count(g1.restrict(only_x), c);
    auto closed = closed_neighborhood(g1, x);
    BigInt in_factor = count(g1.restrict(closed), c);
    for (Vertex u : g1.neighbors(x)) in_factor *= c.out(u);

    ReducedInstance r;
    r.graph = g.restrict(side);
    r.separation = sep.restricted(r.graph);
    r.cardinality = c;
    r.cardinality.scale(x, out_factor, in_factor);
    return r;
}

std::optional<LazySeparatorHit> find_lazy_2_separator(const Graph& g, Vertex x, const WeightSet& w, int radius) {
    if (!g.contains(x)) throw std::invalid_argument("lazy 2-separator: x is not a vertex");
    const double b = w.balance();
    const int inf = 1 << 29;
    std::vector<int> dist(g.capacity(), inf);
    std::deque<Vertex> dq;
    dist[x] = 0;
    dq.push_back(x);
    while (!dq.empty()) {
        Vertex v = dq.front();
        dq.pop_front();
        for (Vertex u : g.neighbors(v)) {
            int step = g.degree(u) >= 3 ? 1 : 0;
            if (dist[v] + step < dist[u]) {
                dist[u] = dist[v] + step;
                if (step == 0) dq.push_front(u);
                else dq.push_back(u);
            }
        }
    }
    std::vector<Vertex> cand;
    for (Vertex v : g.vertices())
        if (g.degree(v) >= 3 && dist[v] <= radius) cand.push_back(v);
    std::vector<std::uint8_t> is_cand(g.capacity(), 0);
    for (Vertex v : cand) is_cand[v] = 1;

    const auto closed = closed_neighborhood(g, x);
    for (Vertex y : cand) {
        Vertex drop_y[1] = {y};
        Graph h = g.restrict(drop_y);
        std::vector<Vertex> zs;
        if (!is_connected(h)) {
            for (Vertex z : cand)
                if (z != y) zs.push_back(z);
        } else {
            for (Vertex z : articulation_points(h))
                if (is_cand[z]) zs.push_back(z);
        }
        for (Vertex z : zs) {
            Vertex pair[2] = {y, z};
            Graph rest = g.restrict(pair);
            auto parts = components(rest);
            if (parts.size() < 2) continue;
            std::vector<Vertex> left;
            for (Vertex v : closed)
                if (v != y && v != z) left.push_back(v);
            if (left.empty()) return LazySeparatorHit{y, z, {}};
            const std::vector<Vertex>* home = nullptr;
            for (const auto& p : parts)
                if (std::binary_search(p.begin(), p.end(), left.front())) home = &p;
            bool together = std::all_of(left.begin(), left.end(), [&](Vertex v) {
                return std::binary_search(home->begin(), home->end(), v);
            });
            if (together && induced_measure(g, *home, w) <= b + 1e-12) return LazySeparatorHit{y, z, *home};
        }
    }
    return std::nullopt;
}

}  // namespace iscount
