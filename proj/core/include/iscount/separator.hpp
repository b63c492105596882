#pragma once

#include "iscount/graph.hpp"
#include "iscount/measure.hpp"
#include "iscount/separation.hpp"

#include <vector>

namespace iscount {

struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each bag sorted

    int width() const;
};

// Edge coverage and contiguous, non-empty occurrence of every vertex.
bool is_valid_decomposition(const Graph& g, const PathDecomposition& pd);
// Consecutive bags differ by exactly one vertex.
bool is_nice(const PathDecomposition& pd);

// Linear arrangement with small vertex separation turned into a nice decomposition.
std::vector<Vertex> linear_arrangement(const Graph& g);
PathDecomposition path_decomposition(const Graph& g);

// Separation read off the nice decomposition with the smallest μ_r imbalance,
// oriented so μ_r(L) ≤ μ_r(R). Spider classification is filled in.
Separation balanced_separation(const Graph& g, const WeightSet& w);

}  // namespace iscount
