#pragma once

// Weight tables as printed in the source analysis, kept as fixtures. Each comes
// with the context WeightSet its constraint system is generated from.

#include "iscount/constraints.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace iscount::published {

inline WeightTable subcubic(double s2, double s3) {
    return {{"r0", 0.0}, {"r1", 0.0}, {"r2", 0.0}, {"r3", 0.2}, {"s0", 0.0},
            {"s1", 0.0}, {"s2", s2},  {"s3", s3},  {"s3p", 0.7}};
}

// The two printed subcubic lists disagree on s2 and s3.
inline WeightTable subcubic_short() { return subcubic(0.6, 0.6838); }
inline WeightTable subcubic_long() { return subcubic(0.6352, 0.6784); }
inline constexpr double subcubic_objective = 0.13262;

inline WeightTable degree3() { return {{"w2", 0.0033}, {"w3", 0.1973}, {"w2p", 0.0228}, {"w3p", 0.1876}}; }
inline WeightSet degree3_context() { return subcubic_weights(subcubic_short()); }
inline constexpr double degree3_base = 1.1388;

// Rows of the degree-4 table: w2, w3, w4 and the running-time base.
inline constexpr std::array<std::array<double, 4>, 5> degree4_rows = {{
    {0.0227913, 0.1875202, 0.3295266, 1.13880},
    {0.0659881, 0.1875202, 0.2863298, 1.15451},
    {0.0795475, 0.1897802, 0.2772902, 1.17571},
    {0.0911988, 0.1936639, 0.2734064, 1.19207},
    {0.1057321, 0.1998925, 0.2713302, 1.2070},
}};

// No value of ψ is printed; this one makes both (2,2,2,2) cases of the first row
// equally tight.
inline double degree4_psi() {
    const auto& r = degree4_rows[0];
    return (r[2] - 2 * r[1] + r[0]) / 2;
}

inline WeightTable degree4() {
    WeightTable t;
    for (int row = 1; row <= 5; ++row)
        for (int d = 2; d <= 4; ++d) t[degree4_key(row, d)] = degree4_rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(d - 2)];
    t["psi"] = degree4_psi();
    return t;
}

// The first row of the table carries the compound degree-3 weights.
inline WeightSet degree4_context() {
    WeightSet w = degree3_context();
    w.w2p = degree4_rows[0][0];
    w.w3p = degree4_rows[0][1];
    return w;
}

inline WeightTable degree56() {
    return {{"w2", 0.1146078}, {"w3", 0.2017931}, {"w4", 0.2713406}, {"w5", 0.2977566}, {"w6", 0.3051140}};
}

inline WeightSet degree56_context() {
    WeightSet w = degree4_context();
    for (int d = 2; d <= 4; ++d) w.w[static_cast<std::size_t>(d)] = degree4_rows[4][static_cast<std::size_t>(d - 2)];
    return w;
}
inline constexpr double degree56_base = 1.2356;

// Printed value of each optimisation stage of a regime, on the scale of the
// stage objective (per-vertex measure, or log2 of the running-time base).
inline std::vector<double> stage_targets(Regime r) {
    switch (r) {
        case Regime::subcubic: return {subcubic_objective};
        case Regime::degree3: return {std::log2(degree3_base)};
        case Regime::degree4: {
            std::vector<double> out;
            for (std::size_t i = 1; i < degree4_rows.size(); ++i) out.push_back(std::log2(degree4_rows[i][3]));
            return out;
        }
        case Regime::degree56: return {std::log2(degree56_base)};
    }
    return {};
}

inline WeightTable table(Regime r) {
    switch (r) {
        case Regime::subcubic: return subcubic_short();
        case Regime::degree3: return degree3();
        case Regime::degree4: return degree4();
        case Regime::degree56: return degree56();
    }
    return {};
}

inline WeightSet context(Regime r) {
    switch (r) {
        case Regime::subcubic: return WeightSet::subcubic_default();
        case Regime::degree3: return degree3_context();
        case Regime::degree4: return degree4_context();
        case Regime::degree56: return degree56_context();
    }
    return {};
}

}  // namespace iscount::published
