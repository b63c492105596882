#include "iscount/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace iscount {

WeightSet WeightSet::subcubic_default() {
    WeightSet w;
    w.r = {0.0, 0.0, 0.0, 0.2};
    w.s = {0.0, 0.0, 0.6, 0.6837381395059063};
    w.s3p = 0.7;
    return w;
}

double BranchingVector::power_sum(double base) const {
    double sum = 0.0;
    for (double d : deltas) sum += std::pow(base, -d);
    return sum;
}

double branching_number(const BranchingVector& v) {
    if (v.deltas.empty()) throw std::domain_error("empty branching vector");
    for (double d : v.deltas)
        if (!(d > 0.0) || !std::isfinite(d)) throw std::domain_error("non-decreasing branch");
    if (v.deltas.size() == 1) return 1.0;
    double lo = 1.0, hi = 2.0;
    while (v.power_sum(hi) > 1.0) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > 1e-13 * hi) {
        double mid = 0.5 * (lo + hi);
        (v.power_sum(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double clamped_log(double x, double epsilon) {
    if (x <= 1.0) return 0.0;
    return std::log(x) / std::log1p(epsilon);
}

MeasureReport measure_mu83(const Graph& g, const Separation& sep, const WeightSet& w) {
    MeasureReport rep;
    if (g.empty()) return rep;
    double left = mu_r(g, sep, Side::left, w);
    double right = mu_r(g, sep, Side::right, w);
    if (left > right) std::swap(left, right);
    for (Vertex v : g.vertices()) {
        if (!sep.in(v, Side::separator)) continue;
        const auto& sp = sep.spider(v);
        bool spider_weight = sp.kind == SpiderKind::left || sp.kind == SpiderKind::right ||
                             (sp.kind == SpiderKind::center && sp.weight_bearer);
        rep.mu_s += spider_weight ? w.s3p : w.s_of(g.degree(v));
    }
    const double b = w.balance();
    rep.mu_r_L = left;
    rep.mu_r_R = right;
    rep.mu_o = std::max(0.0, b - (right - left) / 2.0) + (1.0 + b) * clamped_log(right + rep.mu_s, w.epsilon);
    rep.total = rep.mu_s + rep.mu_r_R + rep.mu_o;
    rep.balanced = right - left <= 2.0 * b;
    return rep;
}

bool has_degree4_potential(const Graph& g) {
    bool any4 = false;
    for (Vertex v : g.vertices()) {
        int d = g.degree(v);
        if (d != 2 && d != 4) return false;
        if (d == 4) {
            any4 = true;
            for (Vertex u : g.neighbors(v))
                if (g.degree(u) == 4) return false;
        }
    }
    return any4;
}

double measure_general(const Graph& g, const WeightSet& w, bool with_potential) {
    if (g.max_degree() >= 7) return g.vertex_count();
    double total = 0.0;
    for (Vertex v : g.vertices()) total += w.w[g.degree(v)];
    if (with_potential && has_degree4_potential(g)) total += w.psi;
    return total;
}

double mu83_upper_bound(const Rational& d, const WeightSet& w) {
    if (d < 2 || d > Rational(8, 3)) throw std::domain_error("average degree outside [2, 8/3]");
    const double x = d.get_d();
    const double sp = w.s3p, s3 = w.s[3], r3 = w.r[3], r2 = w.r[2];
    const double shared = 0.5 * (5.0 / 6.0 * (x - 2.0) * r3 + (3.0 - x) * r2);
    if (d <= Rational(28, 11)) return (x - 2.0) / 6.0 * sp + shared;
    return (8.0 - 3.0 * x) / 4.0 * sp + (11.0 * x - 28.0) / 12.0 * s3 + shared;
}

NeighborProfile NeighborProfile::of(std::vector<int> neighbor_degrees) {
    NeighborProfile p;
    std::sort(neighbor_degrees.begin(), neighbor_degrees.end());
    p.d_v = static_cast<int>(neighbor_degrees.size());
    p.deg2_v = static_cast<int>(std::count(neighbor_degrees.begin(), neighbor_degrees.end(), 2));
    p.neighbor_degrees = std::move(neighbor_degrees);
    if (p.d_v == 5 || p.d_v == 6) p.out_v = out_lower_bound(p);
    return p;
}

int out_lower_bound(const NeighborProfile& p) {
    if (p.d_v != 5 && p.d_v != 6) throw std::domain_error("out(v) is defined for degree 5 and 6 only");
    if (static_cast<int>(p.neighbor_degrees.size()) != p.d_v)
        throw std::invalid_argument("neighbour list does not match the degree");
    std::vector<int> nd = p.neighbor_degrees;
    std::sort(nd.begin(), nd.end());
    const int sum = std::accumulate(nd.begin(), nd.end(), 0);
    const bool all2 = std::all_of(nd.begin(), nd.end(), [](int d) { return d == 2; });
    if (p.d_v == 5) {
        if (all2) return 5;
        return sum % 2 == 1 ? 4 : 3;
    }
    if (all2) return 6;
    if (nd == std::vector<int>{2, 2, 2, 2, 2, 3}) return 5;
    return sum % 2 == 0 ? 4 : 3;
}

}  // namespace iscount
