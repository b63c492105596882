#pragma once

#include "iscount/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace iscount {

struct SkeletonEdge {
    Vertex a = -1;
    Vertex b = -1;
    std::vector<Vertex> interior;  // ordered from a to b
};

struct SkeletonGraph {
    std::vector<Vertex> nodes;
    std::vector<SkeletonEdge> edges;

    std::vector<Vertex> neighbors(Vertex v) const;
};

// Throws std::invalid_argument("not subcubic") when Δ(g) > 3. Pure degree-2
// cycles and pendant chains produce no skeleton edge.
SkeletonGraph skeleton(const Graph& g);

// A walk leaving `from` through its neighbour `first` along degree-2 vertices.
// `end` is the first vertex that stops the walk, or empty when the walk
// runs into a degree-1 vertex (then `interior` includes it) or back to `from`.
struct Arm {
    Vertex first = -1;
    std::vector<Vertex> interior;
    std::optional<Vertex> end;
    bool returns = false;
};

// `stop(v)` marks vertices that end a walk regardless of their degree.
Arm walk_arm(const Graph& g, Vertex from, Vertex first,
             const std::function<bool(Vertex)>& stop = {});

std::vector<Arm> arms(const Graph& g, Vertex from, const std::function<bool(Vertex)>& stop = {});

}  // namespace iscount
