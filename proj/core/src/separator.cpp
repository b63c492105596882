#include "iscount/separator.hpp"

#include "iscount/subcubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iscount {

int PathDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
}

bool is_valid_decomposition(const Graph& g, const PathDecomposition& pd) {
    const int cap = g.capacity();
    std::vector<int> first(cap, -1), last(cap, -1), hits(cap, 0);
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
        for (Vertex v : pd.bags[i]) {
            if (!g.contains(v)) return false;
            if (first[v] < 0) first[v] = i;
            last[v] = i;
            ++hits[v];
        }
    }
    for (Vertex v : g.vertices()) {
        if (first[v] < 0 || last[v] - first[v] + 1 != hits[v]) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i = std::max(first[u], first[v]); i <= std::min(last[u], last[v]) && !covered; ++i)
            covered = std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), u) &&
                      std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), v);
        if (!covered) return false;
    }
    return true;
}

bool is_nice(const PathDecomposition& pd) {
    for (std::size_t i = 1; i < pd.bags.size(); ++i) {
        std::vector<Vertex> diff;
        std::set_symmetric_difference(pd.bags[i - 1].begin(), pd.bags[i - 1].end(), pd.bags[i].begin(),
                                      pd.bags[i].end(), std::back_inserter(diff));
        if (diff.size() != 1) return false;
    }
    return true;
}

namespace {

struct ArrangementCost {
    int max_cut = 0;
    long long total = 0;
    bool operator<(const ArrangementCost& o) const {
        return max_cut != o.max_cut ? max_cut < o.max_cut : total < o.total;
    }
};

// cut[i] = number of vertices at positions ≤ i with a neighbour after i
std::vector<int> cuts(const Graph& g, const std::vector<Vertex>& order, const std::vector<int>& pos) {
    const int n = static_cast<int>(order.size());
    std::vector<int> last(n, 0);
    for (int i = 0; i < n; ++i) {
        int far = i;
        for (Vertex u : g.neighbors(order[i])) far = std::max(far, pos[u]);
        last[i] = far;
    }
    std::vector<int> delta(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (last[i] > i) {
            delta[i] += 1;
            delta[last[i]] -= 1;
        }
    }
    std::vector<int> out(n, 0);
    int run = 0;
    for (int i = 0; i < n; ++i) {
        run += delta[i];
        out[i] = run;
    }
    return out;
}

ArrangementCost cost_of(const std::vector<int>& cut) {
    ArrangementCost c;
    for (int x : cut) {
        c.max_cut = std::max(c.max_cut, x);
        c.total += x;
    }
    return c;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex start) {
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    std::vector<Vertex> order;
    order.reserve(g.vertex_count());
    auto run = [&](Vertex root) {
        std::size_t head = order.size();
        seen[root] = 1;
        order.push_back(root);
        while (head < order.size()) {
            Vertex v = order[head++];
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
        }
    };
    run(start);
    for (Vertex v : g.vertices())
        if (!seen[v]) run(v);
    return order;
}

}  // namespace

std::vector<Vertex> linear_arrangement(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return g.vertices();
    std::vector<Vertex> starts = g.vertices();
    if (n > 64) {
        std::vector<Vertex> picked;
        for (int i = 0; i < 64; ++i) picked.push_back(starts[static_cast<std::size_t>(i) * n / 64]);
        starts = picked;
    }
    std::vector<int> pos(g.capacity(), -1);
    std::vector<Vertex> best;
    ArrangementCost best_cost{std::numeric_limits<int>::max(), 0};
    for (Vertex s : starts) {
        auto order = bfs_order(g, s);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        auto c = cost_of(cuts(g, order, pos));
        if (c < best_cost) {
            best_cost = c;
            best = std::move(order);
        }
    }
    // adjacent transpositions while they help
    for (int pass = 0; pass < 8; ++pass) {
        bool improved = false;
        for (int i = 0; i + 1 < n; ++i) {
            std::swap(best[i], best[i + 1]);
            for (int j = 0; j < n; ++j) pos[best[j]] = j;
            auto c = cost_of(cuts(g, best, pos));
            if (c < best_cost) {
                best_cost = c;
                improved = true;
            } else {
                std::swap(best[i], best[i + 1]);
            }
        }
        if (!improved) break;
    }
    return best;
}

PathDecomposition path_decomposition(const Graph& g) {
    PathDecomposition pd;
    const int n = g.vertex_count();
    if (n == 0) return pd;
    auto order = linear_arrangement(g);
    std::vector<int> pos(g.capacity(), -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<int> last(g.capacity(), 0);
    for (Vertex v : order) {
        int far = pos[v];
        for (Vertex u : g.neighbors(v)) far = std::max(far, pos[u]);
        last[v] = far;
    }
    std::vector<Vertex> bag;
    for (int i = 0; i < n; ++i) {
        // forget everything whose neighbours are all placed
        std::vector<Vertex> done;
        for (Vertex u : bag)
            if (last[u] < i) done.push_back(u);
        for (Vertex u : done) {
            bag.erase(std::find(bag.begin(), bag.end(), u));
            pd.bags.push_back(bag);
        }
        bag.insert(std::lower_bound(bag.begin(), bag.end(), order[i]), order[i]);
        pd.bags.push_back(bag);
    }
    return pd;
}

Separation balanced_separation(const Graph& g, const WeightSet& w) {
    if (g.empty()) return Separation::all(g, Side::right);
    const double b = w.balance();
    auto pd = path_decomposition(g);
    std::vector<std::uint8_t> seen(g.capacity(), 0), in_bag(g.capacity(), 0);
    double total = 0.0;
    for (Vertex v : g.vertices()) total += w.r_of(g.degree(v));
    double left = 0.0, bag_mass = 0.0;
    double prev_gap = 0.0;
    int best = -1;
    double best_gap = std::numeric_limits<double>::infinity();
    std::size_t best_size = 0;
    std::vector<Vertex> prev;
    for (int t = 0; t < static_cast<int>(pd.bags.size()); ++t) {
        const auto& bag = pd.bags[t];
        for (Vertex v : prev)
            if (!std::binary_search(bag.begin(), bag.end(), v)) {
                in_bag[v] = 0;
                left += w.r_of(g.degree(v));
                bag_mass -= w.r_of(g.degree(v));
            }
        for (Vertex v : bag)
            if (!in_bag[v]) {
                in_bag[v] = 1;
                seen[v] = 1;
                bag_mass += w.r_of(g.degree(v));
            }
        double right = total - left - bag_mass;
        double gap = right - left;
        if (t == 0 && left != 0.0) throw std::logic_error("first separation has a non-empty left side");
        if (t > 0 && std::abs(gap - prev_gap) > w.r[3] + 1e-12)
            throw std::logic_error("separation imbalance jumped by more than r_3");
        prev_gap = gap;
        double imbalance = std::abs(gap);
        if (imbalance <= b + 1e-12 &&
            (imbalance < best_gap - 1e-12 || (imbalance <= best_gap + 1e-12 && bag.size() < best_size))) {
            best = t;
            best_gap = imbalance;
            best_size = bag.size();
        }
        prev = bag;
    }
    for (Vertex v : g.vertices())
        if (!seen[v]) throw std::logic_error("last separation has a non-empty right side");
    if (best < 0) throw std::logic_error("no balanced bag found");

    Separation sep = Separation::all(g, Side::right);
    std::vector<std::uint8_t> placed(g.capacity(), 0);
    for (int t = 0; t <= best; ++t)
        for (Vertex v : pd.bags[t]) placed[v] = 1;
    for (Vertex v : g.vertices())
        if (placed[v]) sep.assign(v, Side::left);
    for (Vertex v : pd.bags[best]) sep.assign(v, Side::separator);
    if (mu_r(g, sep, Side::left, w) > mu_r(g, sep, Side::right, w)) sep.swap_sides();
    if (g.max_degree() <= 3) classify_spiders(g, sep);
    return sep;
}

}  // namespace iscount
