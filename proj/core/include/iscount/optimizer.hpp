#pragma once

#include "iscount/constraints.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace iscount {

// Raised when a stage has no feasible point; `binding` names the constraints
// that kept cutting the search region.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& stage, std::vector<std::string> binding);
    const std::vector<std::string>& binding() const { return binding_; }

private:
    std::vector<std::string> binding_;
};

struct OptimizeOptions {
    double gap = 1e-10;  // stop once the objective is certified within this
    int max_iterations = 400000;
    double box = 8.0;  // |weight| ≤ box for every free weight
};

struct StageResult {
    std::string label;
    double objective = 0.0;
    double base = 0.0;  // 2^objective
    int iterations = 0;
};

struct OptimizeResult {
    WeightTable weights;
    std::vector<StageResult> stages;
};

// Runs the stages of `cs` in order. Each stage minimises the maximum of its
// objective forms over the constraints of its groups, with `fixed` and every
// earlier stage's pins held constant. The search is a deep-cut ellipsoid method
// on the convex reformulation log2 Σ 2^{−δ_i} ≤ 0 of the branching constraints,
// restricted to the affine subspace of the equalities.
OptimizeResult optimize_weights(const ConstraintSystem& cs, const WeightTable& fixed = {},
                                const OptimizeOptions& opt = {});

// Copies a regime's optimised weights into a WeightSet: subcubic sets r, s, s3p;
// degree-3 sets w[2], w[3], w2p, w3p; degree-4 sets w[2..4] from the last row and
// psi; degree-5-6 sets w[2..6].
WeightSet apply_weights(WeightSet base, Regime regime, const WeightTable& t);

struct ChainResult {
    Regime regime;
    OptimizeResult result;
    WeightSet context;  // the context the regime was generated with
};

// Optimises the four regimes in order, feeding each result into the next context.
std::vector<ChainResult> optimize_chain(const OptimizeOptions& opt = {});

}  // namespace iscount
