#pragma once

#include "iscount/measure.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iscount {

enum class Regime { subcubic, degree3, degree4, degree56 };

std::string_view regime_name(Regime r);
// Accepts "subcubic-8/3" (or "subcubic"), "degree-3", "degree-4", "degree-5-6".
std::optional<Regime> parse_regime(std::string_view text);

using WeightTable = std::map<std::string, double>;

// Σ coef·var + constant over named weights.
struct LinearForm {
    std::map<std::string, double> terms;
    double constant = 0.0;

    static LinearForm var(const std::string& name, double coef = 1.0);
    static LinearForm value(double c);

    double eval(const WeightTable& t) const;  // throws std::out_of_range on a missing weight
    std::string to_string() const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(double k);
};

LinearForm operator+(LinearForm a, const LinearForm& b);
LinearForm operator-(LinearForm a, const LinearForm& b);
LinearForm operator*(double k, LinearForm a);

enum class Relation { le, eq };  // form ≤ 0 or form = 0

struct LinearConstraint {
    std::string label;
    LinearForm form;
    Relation rel = Relation::le;
    int group = 0;
};

// Feasible when Σ 2^{−δ_i} ≤ 1.
struct BranchingConstraint {
    std::string label;
    std::vector<LinearForm> deltas;
    int group = 0;

    BranchingVector at(const WeightTable& t) const;
};

// Minimise the maximum of `objective` using the constraints of `groups`;
// afterwards the weights in `pin_after` keep their optimised values.
struct OptimizationStage {
    std::string label;
    std::vector<LinearForm> objective;
    std::vector<int> groups;
    std::vector<std::string> pin_after;

    double value(const WeightTable& t) const;
};

struct ConstraintSystem {
    Regime regime = Regime::subcubic;
    std::vector<std::string> variables;
    std::vector<LinearConstraint> linear;
    std::vector<BranchingConstraint> branching;
    std::vector<OptimizationStage> stages;

    std::size_t size() const { return linear.size() + branching.size(); }
    // One constraint per line.
    std::string to_text() const;
};

// `context` supplies the weights a regime links to: the subcubic r, s and s3p
// for degree-3, w2p/w3p (the first degree-4 row) for degree-4, and w[2..4]
// (the last degree-4 row, as lower bounds) for degree-5-6.
ConstraintSystem generate_constraints(Regime regime, const WeightSet& context = WeightSet::subcubic_default());

struct ConstraintCheck {
    std::string label;
    bool branching = false;
    double slack = 0.0;  // ≥ 0 when satisfied; 1 − Σ 2^{−δ} for branching constraints
    bool ok = true;
};

struct VerifyReport {
    double tolerance = 1e-9;
    std::vector<ConstraintCheck> checks;

    bool ok() const;
    std::vector<ConstraintCheck> violations() const;
    double worst_slack() const;
};

VerifyReport verify_weights(const ConstraintSystem& cs, const WeightTable& t, double tolerance = 1e-9);

// Weight-table views of a WeightSet; names follow generate_constraints.
WeightTable subcubic_table(const WeightSet& w);
WeightSet subcubic_weights(const WeightTable& t);
WeightTable degree3_table(const WeightSet& w);  // w2, w3 from w.w, w2p, w3p

// Degree-4 row j (1-based) weights are "row<j>.w2", "row<j>.w3", "row<j>.w4"; "psi" is shared.
std::string degree4_key(int row, int degree);
inline constexpr double degree4_lower[5] = {2.0, 3.0, 3.2, 3.5, 3.75};
inline constexpr double degree4_upper[5] = {3.0, 3.2, 3.5, 3.75, 4.0};

// Per-vertex measure bound of a (w2, w3, w4) row over graphs of average degree d:
// the upper concave envelope of (2, w2), (3, w3), (4, w4) at d.
double row_envelope(double w2, double w3, double w4, double d);

}  // namespace iscount
