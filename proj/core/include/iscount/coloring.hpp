#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"

#include <vector>

namespace iscount {

struct ColoringOptions {
    int cap = 24;     // largest vertex count accepted
    int threads = 1;  // workers splitting the outer subset loop
};

// Σ_{X ⊆ V} (−1)^{n−|X|} s(X)^k with s(X) the number of independent sets of G[X].
// Positive exactly when G is k-colourable. Throws std::invalid_argument above the cap.
BigInt k_cover_count(const Graph& g, int k, const ColoringOptions& opt = {});

// The same sums for every k in 0..kmax from a single pass over the subsets.
std::vector<BigInt> cover_counts(const Graph& g, int kmax, const ColoringOptions& opt = {});

// Smallest k with a positive cover count, taken per component.
int chromatic_number(const Graph& g, const ColoringOptions& opt = {});

}  // namespace iscount
