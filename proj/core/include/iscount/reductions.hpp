#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/measure.hpp"
#include "iscount/separation.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace iscount {

// Requires Δ(g) ≤ 2; throws std::invalid_argument otherwise.
BigInt solve_max_degree_2(const Graph& g, const CardinalityFunction& c);

// Σ r over degrees in the subgraph induced by `part`.
double induced_measure(const Graph& g, std::span<const Vertex> part, const WeightSet& w);

using SubSolver = std::function<BigInt(const Graph&, const CardinalityFunction&)>;

struct MultiplierCandidate {
    Vertex x = -1;
    std::vector<Vertex> side;
};

struct ReducedInstance {
    Graph graph;
    Separation separation;
    CardinalityFunction cardinality;
};

// Cut vertices by increasing id; the first one with a component of G − x whose
// measure together with x is at most B wins, taking its smallest such component.
std::optional<MultiplierCandidate> find_multiplier_reduction(const Graph& g, const WeightSet& w);

// Folds G1 = G[side ∪ {x}] into the cardinality of x. `solve` counts the small
// part; it defaults to count_independent_sets.
ReducedInstance multiplier_reduction(const Graph& g, const Separation& sep, const CardinalityFunction& c,
                                     Vertex x, std::span<const Vertex> side,
                                     const WeightSet& w = WeightSet::subcubic_default(),
                                     const SubSolver& solve = {});

struct LazySeparatorHit {
    Vertex y = -1;
    Vertex z = -1;
    std::vector<Vertex> component;  // holds N[x] minus {y, z}; empty when nothing is left
};

// Pairs {y, z} of degree ≥ 3 within `radius` skeleton hops of x (degree-2
// vertices are free to cross).
std::optional<LazySeparatorHit> find_lazy_2_separator(const Graph& g, Vertex x, const WeightSet& w,
                                                      int radius = 4);

}  // namespace iscount
