#pragma once

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/measure.hpp"
#include "iscount/separation.hpp"
#include "iscount/solver.hpp"

#include <vector>

namespace iscount {

// Throws std::invalid_argument("not a valid #3IS instance") unless Δ ≤ 3, there
// is no (3,3,3) vertex and `sep` is a valid separation of g.
BigInt three_is(const Graph& g, const Separation& sep, const CardinalityFunction& c,
                const SolverOptions& opt = {}, SolveStats* stats = nullptr);

struct SimplifyTrace {
    std::vector<Rule> fired;
};

// Applies the five drag rules until none fires. Every vertex left in S has
// degree 3 and satisfies skeleton_anchored.
Separation simplify(const Graph& g, Separation sep, const WeightSet& w = WeightSet::subcubic_default(),
                    SimplifyTrace* trace = nullptr);

// A 2-path from v to a degree-3 vertex `to`; `path` holds the degree-2 interior.
struct SkeletonLink {
    Vertex to = -1;
    std::vector<Vertex> path;
};

std::vector<SkeletonLink> skeleton_links(const Graph& g, Vertex v);
// Distinct skeleton neighbours, sorted.
std::vector<Vertex> skeleton_neighbors(const Graph& g, Vertex v);
std::vector<Vertex> skeleton_neighbors(const Graph& g, Vertex v, const Separation& sep, Side side);

bool has_neighbor_degrees_222(const Graph& g, Vertex v);

SpiderClassification classify_spider(const Graph& g, const Separation& sep, Vertex s);
void classify_spiders(const Graph& g, Separation& sep);

// Every s ∈ S has r ∈ N_Γ(s) ∩ R with N_Γ(r) ∩ R ≠ ∅, and the same for L.
bool skeleton_anchored(const Graph& g, const Separation& sep);

// Requires s ∈ S with neighbour degrees (2,2,2).
BigInt spider(Vertex s, const Graph& g, const Separation& sep, const CardinalityFunction& c,
              const SolverOptions& opt = {}, SolveStats* stats = nullptr);

}  // namespace iscount
