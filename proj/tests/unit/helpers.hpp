#pragma once

#include "iscount/graph.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

inline iscount::Graph make(int n, std::initializer_list<iscount::Edge> edges) {
    std::vector<iscount::Edge> list(edges);
    return iscount::Graph::from_edges(n, list);
}

inline iscount::Graph disjoint_triangles() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

}  // namespace testing
