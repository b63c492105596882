#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"

#include <vector>

namespace iscount {

// Reference counts that share no code with the solver. Each throws
// std::invalid_argument when the graph exceeds its size cap.

// n ≤ 20 enumerates every subset, larger graphs (n ≤ 30) go through meet-in-the-middle.
BigInt brute_force_ind(const Graph& g, const CardinalityFunction& c);
BigInt brute_force_ind(const Graph& g);

BigInt brute_force_ind_enumerate(const Graph& g, const CardinalityFunction& c);      // n ≤ 24
BigInt brute_force_ind_meet_in_middle(const Graph& g, const CardinalityFunction& c);  // n ≤ 30

// n ≤ 16
int brute_force_chromatic(const Graph& g);

// Coefficient i counts independent sets of size i. n ≤ 20.
std::vector<BigInt> independence_polynomial(const Graph& g);

}  // namespace iscount
