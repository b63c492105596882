#pragma once

#include "iscount/graph.hpp"
#include "iscount/separation.hpp"

#include <array>
#include <string>
#include <vector>

namespace iscount {

struct WeightSet {
    std::array<double, 4> r{};
    std::array<double, 4> s{};
    double s3p = 0.0;
    std::array<double, 7> w{};  // w[2..6]; w[0], w[1] stay 0
    double w2p = 0.0;
    double w3p = 0.0;
    double psi = 0.0;
    double epsilon = 0.01;

    double balance() const { return 6.0 * s[3]; }
    double r_of(int degree) const { return r[degree > 3 ? 3 : (degree < 0 ? 0 : degree)]; }
    double s_of(int degree) const { return s[degree > 3 ? 3 : (degree < 0 ? 0 : degree)]; }

    // Frozen output of the subcubic optimisation; the solver's default.
    static WeightSet subcubic_default();
};

struct BranchingVector {
    std::vector<double> deltas;
    std::string label;

    double power_sum(double base = 2.0) const;  // Σ base^{-δ_i}
};

// Root x > 1 of Σ x^{-δ_i} = 1; throws std::domain_error("non-decreasing branch")
// when some δ_i ≤ 0. A single branch has root 1.
double branching_number(const BranchingVector& v);

struct MeasureReport {
    double mu_s = 0.0;
    double mu_r_R = 0.0;
    double mu_r_L = 0.0;
    double mu_o = 0.0;
    double total = 0.0;
    bool balanced = true;
};

// log_{1+ε}(x), clamped to 0 for x ≤ 1.
double clamped_log(double x, double epsilon);

MeasureReport measure_mu83(const Graph& g, const Separation& sep, const WeightSet& w);

// Σ_v w_{d(v)}, plus ψ for the degree-4 potential pattern when `with_potential`.
// Graphs with a vertex of degree ≥ 7 fall back to the vertex count.
double measure_general(const Graph& g, const WeightSet& w, bool with_potential = false);
bool has_degree4_potential(const Graph& g);

// Per-vertex bound on μ_{8/3} at average degree d ∈ [2, 8/3].
double mu83_upper_bound(const Rational& d, const WeightSet& w);

struct NeighborProfile {
    int d_v = 0;
    std::vector<int> neighbor_degrees;
    int out_v = 0;
    int deg2_v = 0;

    static NeighborProfile of(std::vector<int> neighbor_degrees);
};

int out_lower_bound(const NeighborProfile& p);

}  // namespace iscount
