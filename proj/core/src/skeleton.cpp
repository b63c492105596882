#include "iscount/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace iscount {

std::vector<Vertex> SkeletonGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v && e.a != v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Arm walk_arm(const Graph& g, Vertex from, Vertex first, const std::function<bool(Vertex)>& stop) {
    Arm arm;
    arm.first = first;
    Vertex prev = from;
    Vertex cur = first;
    while (true) {
        if (cur == from) {
            arm.returns = true;
            arm.end = from;
            return arm;
        }
        if ((stop && stop(cur)) || g.degree(cur) >= 3) {
            arm.end = cur;
            return arm;
        }
        arm.interior.push_back(cur);
        if (g.degree(cur) <= 1) return arm;
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
}

std::vector<Arm> arms(const Graph& g, Vertex from, const std::function<bool(Vertex)>& stop) {
    std::vector<Arm> out;
    for (Vertex u : g.neighbors(from)) out.push_back(walk_arm(g, from, u, stop));
    return out;
}

SkeletonGraph skeleton(const Graph& g) {
    if (g.max_degree() > 3) throw std::invalid_argument("not subcubic");
    SkeletonGraph sk;
    for (Vertex v : g.vertices())
        if (g.degree(v) == 3) sk.nodes.push_back(v);
    for (Vertex a : sk.nodes) {
        for (Vertex u : g.neighbors(a)) {
            Arm arm = walk_arm(g, a, u);
            if (!arm.end) continue;
            Vertex b = *arm.end;
            // every path is met from both ends; keep one copy
            if (b < a) continue;
            if (b == a && arm.interior.front() > arm.interior.back()) continue;
            sk.edges.push_back({a, b, std::move(arm.interior)});
        }
    }
    return sk;
}

}  // namespace iscount
