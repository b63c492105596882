#include "iscount/coloring.hpp"

#include "iscount/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace iscount {

namespace {

void check_cap(const Graph& g, const ColoringOptions& opt) {
    if (g.vertex_count() > opt.cap)
        throw std::invalid_argument("graph exceeds the coloring cap of " + std::to_string(opt.cap) + " vertices");
}

// Below this many vertices the solver's per-call setup dominates, so subsets are
// counted by plain branching on adjacency masks instead.
constexpr int small_subset = 20;

std::uint64_t count_masked(std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
    if (mask == 0) return 1;
    int best = -1, best_deg = -1;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(adj[v] & mask);
        if (d > best_deg) best = v, best_deg = d;
    }
    if (best_deg == 0) return std::uint64_t{1} << std::popcount(mask);
    const std::uint32_t out = mask & ~(std::uint32_t{1} << best);
    return count_masked(out, adj) + count_masked(out & ~adj[best], adj);
}

// Partial sums over the Gray-code ranks [lo, hi).
std::vector<BigInt> cover_range(const Graph& g, const std::vector<Vertex>& ids, int kmax, std::uint64_t lo,
                                std::uint64_t hi) {
    const int n = static_cast<int>(ids.size());
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(ids[i], ids[j])) adj[i] |= std::uint32_t{1} << j;
    std::vector<BigInt> sums(kmax + 1, 0);
    SolverOptions solo;
    std::vector<Vertex> kept;
    BigInt s;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        const std::uint64_t x = rank ^ (rank >> 1);
        kept.clear();
        for (int i = 0; i < n; ++i)
            if (x >> i & 1) kept.push_back(ids[i]);
        if (static_cast<int>(kept.size()) <= small_subset) {
            const std::uint64_t v = count_masked(static_cast<std::uint32_t>(x), adj);
            s = static_cast<unsigned long>(v);
        } else {
            s = count_independent_sets(g.induced(kept), solo).count;
        }
        const bool negative = (n - static_cast<int>(kept.size())) % 2 != 0;
        BigInt power = 1;
        for (int k = 0; k <= kmax; ++k) {
            if (negative) sums[k] -= power;
            else sums[k] += power;
            power *= s;
        }
    }
    return sums;
}

}  // namespace

std::vector<BigInt> cover_counts(const Graph& g, int kmax, const ColoringOptions& opt) {
    check_cap(g, opt);
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
    const auto ids = g.vertices();
    const std::uint64_t total = std::uint64_t{1} << ids.size();
    const int workers = static_cast<int>(std::clamp<std::uint64_t>(opt.threads, 1, std::max<std::uint64_t>(1, total / 64)));
    if (workers == 1) return cover_range(g, ids, kmax, 0, total);

    std::vector<std::vector<BigInt>> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] { parts[w] = cover_range(g, ids, kmax, lo, hi); });
    }
    for (auto& t : pool) t.join();
    std::vector<BigInt> sums(kmax + 1, 0);
    for (const auto& p : parts)
        for (int k = 0; k <= kmax; ++k) sums[k] += p[k];
    return sums;
}

BigInt k_cover_count(const Graph& g, int k, const ColoringOptions& opt) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return cover_counts(g, k, opt)[k];
}

namespace {

// Colours used by greedy colouring in order of decreasing degree.
int greedy_colors(const Graph& g) {
    auto order = g.vertices();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.capacity()), -1);
    int used = 0;
    for (Vertex v : order) {
        std::vector<bool> taken(static_cast<std::size_t>(used) + 1, false);
        for (Vertex u : g.neighbors(v))
            if (color[u] >= 0) taken[color[u]] = true;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

int chromatic_number(const Graph& g, const ColoringOptions& opt) {
    check_cap(g, opt);
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (is_bipartite(g)) return 2;
    int best = 2;
    for (const auto& part : components(g)) {
        Graph h = g.induced(part);
        if (h.edge_count() == 0 || is_bipartite(h)) continue;
        // Only colour counts below the greedy bound need the expensive sums.
        const int upper = greedy_colors(h);
        if (upper <= best) continue;
        auto sums = cover_counts(h, upper - 1, opt);
        int chi = upper;
        for (int k = 3; k < upper; ++k)
            if (sums[k] > 0) {
                chi = k;
                break;
            }
        best = std::max(best, chi);
    }
    return best;
}

}  // namespace iscount
