#include "iscount/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace iscount {

namespace {

using Mask = std::uint32_t;

struct Dense {
    std::vector<Vertex> ids;   // dense index -> vertex id
    std::vector<Mask> adj;     // dense adjacency bitmasks
};

Dense densify(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("oracle: graph has more than " + std::to_string(cap) + " vertices");
    Dense d;
    d.ids = g.vertices();
    std::vector<int> pos(g.capacity(), -1);
    for (std::size_t i = 0; i < d.ids.size(); ++i) pos[d.ids[i]] = static_cast<int>(i);
    d.adj.assign(d.ids.size(), 0);
    for (auto [u, v] : g.edges()) {
        d.adj[pos[u]] |= Mask{1} << pos[v];
        d.adj[pos[v]] |= Mask{1} << pos[u];
    }
    return d;
}

bool independent(const Dense& d, Mask set) {
    for (Mask rest = set; rest; rest &= rest - 1)
        if (d.adj[std::countr_zero(rest)] & set) return false;
    return true;
}

BigInt weight(const Dense& d, const CardinalityFunction& c, Mask set, int lo, int hi) {
    BigInt w = 1;
    for (int i = lo; i < hi; ++i) w *= (set >> i & 1) ? c.in(d.ids[i]) : c.out(d.ids[i]);
    return w;
}

}  // namespace

BigInt brute_force_ind_enumerate(const Graph& g, const CardinalityFunction& c) {
    const Dense d = densify(g, 24);
    const int n = static_cast<int>(d.ids.size());
    const bool unit = c.is_unit();
    std::uint64_t plain = 0;
    BigInt total = 0;
    for (Mask set = 0; set < (Mask{1} << n); ++set) {
        if (!independent(d, set)) continue;
        if (unit) ++plain;
        else total += weight(d, c, set, 0, n);
    }
    if (unit) return BigInt(static_cast<unsigned long>(plain));
    return total;
}

BigInt brute_force_ind_meet_in_middle(const Graph& g, const CardinalityFunction& c) {
    const Dense d = densify(g, 30);
    const int n = static_cast<int>(d.ids.size());
    const int a = n / 2;        // first half: dense indices [0, a)
    const int b = n - a;        // second half: [a, n)
    const Mask low = (Mask{1} << a) - 1;
    std::vector<BigInt> below(std::size_t{1} << b);
    for (Mask y = 0; y < (Mask{1} << b); ++y) {
        Mask set = y << a;
        below[y] = independent(d, set) ? weight(d, c, set, a, n) : BigInt(0);
    }
    for (int i = 0; i < b; ++i)
        for (Mask t = 0; t < (Mask{1} << b); ++t)
            if (t >> i & 1) below[t] += below[t ^ (Mask{1} << i)];
    const Mask all_high = (Mask{1} << b) - 1;
    BigInt total = 0;
    for (Mask x = 0; x <= low; ++x) {
        if (!independent(d, x)) continue;
        Mask blocked = 0;
        for (Mask rest = x; rest; rest &= rest - 1) blocked |= d.adj[std::countr_zero(rest)];
        Mask free_high = ~(blocked >> a) & all_high;
        total += weight(d, c, x, 0, a) * below[free_high];
    }
    return total;
}

BigInt brute_force_ind(const Graph& g, const CardinalityFunction& c) {
    if (g.vertex_count() <= 20) return brute_force_ind_enumerate(g, c);
    return brute_force_ind_meet_in_middle(g, c);
}

BigInt brute_force_ind(const Graph& g) { return brute_force_ind(g, CardinalityFunction::unit(g)); }

int brute_force_chromatic(const Graph& g) {
    const Dense d = densify(g, 16);
    const int n = static_cast<int>(d.ids.size());
    const Mask full = (Mask{1} << n) - 1;
    std::vector<std::uint8_t> indep(full + 1);
    for (Mask s = 0; s <= full; ++s) indep[s] = independent(d, s);
    std::vector<int> best(full + 1, std::numeric_limits<int>::max());
    best[0] = 0;
    for (Mask m = 1; m <= full; ++m) {
        const Mask lowest = m & (~m + 1);
        const Mask rest = m ^ lowest;
        // colour classes containing the lowest vertex of m
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask cls = sub | lowest;
            if (indep[cls] && best[m ^ cls] + 1 < best[m]) best[m] = best[m ^ cls] + 1;
            if (sub == 0) break;
        }
    }
    return best[full];
}

std::vector<BigInt> independence_polynomial(const Graph& g) {
    const Dense d = densify(g, 20);
    const int n = static_cast<int>(d.ids.size());
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (Mask set = 0; set < (Mask{1} << n); ++set)
        if (independent(d, set)) ++counts[std::popcount(set)];
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    std::vector<BigInt> out;
    for (auto k : counts) out.emplace_back(static_cast<unsigned long>(k));
    return out;
}

}  // namespace iscount
