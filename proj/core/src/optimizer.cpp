#include "iscount/optimizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

namespace iscount {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : "; ") + l;
    return out;
}

}  // namespace

InfeasibleError::InfeasibleError(const std::string& stage, std::vector<std::string> binding)
    : std::runtime_error("stage '" + stage + "' is infeasible; binding: " + join_labels(binding)),
      binding_(std::move(binding)) {}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// An affine function a·x + c over the free weights of a stage.
struct Affine {
    VectorXd a;
    double c = 0.0;

    double at(const VectorXd& x) const { return a.dot(x) + c; }
};

struct Cut {
    std::string label;
    std::vector<Affine> pieces;  // linear: one piece; branching: the deltas
    bool branching = false;
};

// Value and gradient (in x) of a constraint g(x) ≤ 0.
double evaluate(const Cut& cut, const VectorXd& x, VectorXd& grad) {
    if (!cut.branching) {
        grad = cut.pieces[0].a;
        return cut.pieces[0].at(x);
    }
    // log2 Σ 2^{−δ_i}, shifted for stability
    double lo = std::numeric_limits<double>::infinity();
    std::vector<double> d(cut.pieces.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = cut.pieces[i].at(x);
        lo = std::min(lo, d[i]);
    }
    double sum = 0.0;
    for (double di : d) sum += std::exp2(lo - di);
    grad = VectorXd::Zero(x.size());
    for (std::size_t i = 0; i < d.size(); ++i) grad -= (std::exp2(lo - d[i]) / sum) * cut.pieces[i].a;
    return std::log2(sum) - lo;
}

// Ellipsoid {z : (z−c)ᵀ P⁻¹ (z−c) ≤ 1}; in one dimension an interval.
class Region {
public:
    Region(const VectorXd& center, double radius)
        : n_(static_cast<int>(center.size())), c_(center), p_(MatrixXd::Identity(n_, n_) * radius * radius) {}

    const VectorXd& center() const { return c_; }
    double width(const VectorXd& a) const { return std::sqrt(std::max(0.0, a.dot(p_ * a))); }

    // Keeps {z : a·(z−c) + g ≤ 0}; false when that leaves nothing.
    bool cut(const VectorXd& a, double g) {
        const double w = width(a);
        if (w <= 0.0) return g <= 0.0;
        const double alpha = g / w;
        if (alpha >= 1.0) return false;
        if (alpha <= -1.0) return true;
        const VectorXd b = p_ * a / w;
        if (n_ == 1) {
            // exact interval update
            const double half = std::sqrt(p_(0, 0));
            double lo = c_(0) - half, hi = c_(0) + half;
            const double bound = c_(0) - g / a(0);
            if (a(0) > 0) hi = std::min(hi, bound);
            else lo = std::max(lo, bound);
            c_(0) = 0.5 * (lo + hi);
            p_(0, 0) = 0.25 * (hi - lo) * (hi - lo);
            return hi > lo;
        }
        const double n = n_;
        c_ -= ((1 + n * alpha) / (n + 1)) * b;
        p_ = (n * n / (n * n - 1)) * (1 - alpha * alpha) *
             (p_ - (2 * (1 + n * alpha) / ((n + 1) * (1 + alpha))) * b * b.transpose());
        p_ = 0.5 * (p_ + p_.transpose());
        return true;
    }

private:
    int n_;
    VectorXd c_;
    MatrixXd p_;
};

struct StageProblem {
    std::vector<std::string> names;  // free weights
    std::vector<Cut> cuts;
    std::vector<Affine> objective;
    std::vector<std::pair<std::string, Affine>> equalities;
};

Affine lower(const LinearForm& f, const std::vector<std::string>& names, const WeightTable& fixed) {
    Affine out;
    out.a = VectorXd::Zero(static_cast<Eigen::Index>(names.size()));
    out.c = f.constant;
    for (const auto& [name, coef] : f.terms) {
        if (auto it = fixed.find(name); it != fixed.end()) {
            out.c += coef * it->second;
            continue;
        }
        auto pos = std::find(names.begin(), names.end(), name);
        out.a(pos - names.begin()) += coef;
    }
    return out;
}

StageProblem build(const ConstraintSystem& cs, const OptimizationStage& st, const WeightTable& fixed,
                   double box) {
    auto active = [&](int group) { return std::find(st.groups.begin(), st.groups.end(), group) != st.groups.end(); };
    std::set<std::string> seen;
    StageProblem p;
    auto collect = [&](const LinearForm& f) {
        for (const auto& [name, coef] : f.terms)
            if (!fixed.count(name) && seen.insert(name).second) p.names.push_back(name);
    };
    for (const auto& c : cs.linear)
        if (active(c.group)) collect(c.form);
    for (const auto& b : cs.branching)
        if (active(b.group))
            for (const auto& d : b.deltas) collect(d);
    for (const auto& f : st.objective) collect(f);

    for (const auto& c : cs.linear) {
        if (!active(c.group)) continue;
        Affine a = lower(c.form, p.names, fixed);
        if (c.rel == Relation::eq) p.equalities.push_back({c.label, a});
        else p.cuts.push_back({c.label, {a}, false});
    }
    for (const auto& b : cs.branching) {
        if (!active(b.group)) continue;
        Cut cut{b.label, {}, true};
        for (const auto& d : b.deltas) cut.pieces.push_back(lower(d, p.names, fixed));
        p.cuts.push_back(std::move(cut));
    }
    for (std::size_t i = 0; i < p.names.size(); ++i) {
        Affine up{VectorXd::Zero(static_cast<Eigen::Index>(p.names.size())), -box};
        up.a(static_cast<Eigen::Index>(i)) = 1.0;
        Affine down = up;
        down.a *= -1.0;
        p.cuts.push_back({"box " + p.names[i], {up}, false});
        p.cuts.push_back({"box " + p.names[i], {down}, false});
    }
    for (const auto& f : st.objective) p.objective.push_back(lower(f, p.names, fixed));
    return p;
}

double objective_at(const StageProblem& p, const VectorXd& x, VectorXd& grad) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& f : p.objective) {
        double v = f.at(x);
        if (v > best) {
            best = v;
            grad = f.a;
        }
    }
    return best;
}

StageResult solve_stage(const ConstraintSystem& cs, const OptimizationStage& st, WeightTable& table,
                        const OptimizeOptions& opt) {
    StageProblem p = build(cs, st, table, opt.box);
    const auto nx = static_cast<Eigen::Index>(p.names.size());

    // x = x0 + N z spans the solutions of the equalities
    VectorXd x0 = VectorXd::Zero(nx);
    MatrixXd basis = MatrixXd::Identity(nx, nx);
    if (!p.equalities.empty() && nx > 0) {
        MatrixXd a(static_cast<Eigen::Index>(p.equalities.size()), nx);
        VectorXd rhs(a.rows());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            a.row(i) = p.equalities[static_cast<std::size_t>(i)].second.a.transpose();
            rhs(i) = -p.equalities[static_cast<std::size_t>(i)].second.c;
        }
        Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
        svd.setThreshold(1e-10);
        x0 = svd.solve(rhs);
        const Eigen::Index rank = svd.rank();
        basis = svd.matrixV().rightCols(nx - rank);
    }
    std::vector<std::string> broken;
    for (const auto& [label, a] : p.equalities)
        if (std::fabs(a.at(x0)) > 1e-9) broken.push_back(label);
    if (!broken.empty()) throw InfeasibleError(st.label, broken);

    const int nz = static_cast<int>(basis.cols());
    StageResult res;
    res.label = st.label;
    VectorXd grad;
    VectorXd best_x, best_z;
    double best = std::numeric_limits<double>::infinity();
    std::deque<std::string> recent;

    auto violated = [&](const VectorXd& x, std::vector<std::string>* labels) {
        double worst = 0.0;
        for (const auto& cut : p.cuts) {
            double g = evaluate(cut, x, grad);
            if (g > 0 && labels) labels->push_back(cut.label);
            worst = std::max(worst, g);
        }
        return worst;
    };

    if (nz == 0) {
        std::vector<std::string> labels;
        if (violated(x0, &labels) > 0) throw InfeasibleError(st.label, labels);
        best_x = x0;
        best = objective_at(p, x0, grad);
    } else {
        // Restarting from the incumbent undoes the ill-conditioning a flat optimal
        // face causes; each restart is cheap.
        const double radius = opt.box * std::sqrt(static_cast<double>(nx)) + x0.norm() + 1.0;
        VectorXd start = VectorXd::Zero(nz);
        for (int round = 0; round < 40 && res.iterations < opt.max_iterations; ++round) {
            const double before = best;
            Region region(start, radius);
            for (; res.iterations < opt.max_iterations; ++res.iterations) {
                const VectorXd x = x0 + basis * region.center();
                // deepest violated cut
                double deepest = 0.0, depth_g = 0.0;
                VectorXd cut_dir;
                const std::string* cut_label = nullptr;
                for (const auto& cut : p.cuts) {
                    double g = evaluate(cut, x, grad);
                    if (g <= 0) continue;
                    VectorXd gz = basis.transpose() * grad;
                    double w = region.width(gz);
                    double depth = w > 0 ? g / w : std::numeric_limits<double>::infinity();
                    if (!cut_label || depth > deepest) {
                        deepest = depth;
                        depth_g = g;
                        cut_dir = gz;
                        cut_label = &cut.label;
                    }
                }
                if (cut_label) {
                    recent.push_back(*cut_label);
                    if (recent.size() > 64) recent.pop_front();
                    if (!region.cut(cut_dir, depth_g)) break;
                    continue;
                }
                double f = objective_at(p, x, grad);
                if (f < best) {
                    best = f;
                    best_x = x;
                    best_z = region.center();
                }
                VectorXd gz = basis.transpose() * grad;
                if (region.width(gz) < opt.gap) break;
                if (!region.cut(gz, f - best)) break;
            }
            if (best_x.size() == 0 || !(before - best > opt.gap)) break;
            start = best_z;
        }
        if (best_x.size() == 0) {
            std::vector<std::string> labels(recent.begin(), recent.end());
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            throw InfeasibleError(st.label, labels);
        }
    }
    for (Eigen::Index i = 0; i < nx; ++i) table[p.names[static_cast<std::size_t>(i)]] = best_x(i);
    res.objective = best;
    res.base = std::exp2(best);
    return res;
}

}  // namespace

OptimizeResult optimize_weights(const ConstraintSystem& cs, const WeightTable& fixed, const OptimizeOptions& opt) {
    OptimizeResult out;
    WeightTable pinned = fixed;
    for (const auto& st : cs.stages) {
        WeightTable work = pinned;
        out.stages.push_back(solve_stage(cs, st, work, opt));
        for (const auto& [name, value] : work) out.weights[name] = value;
        for (const auto& name : st.pin_after) {
            auto it = work.find(name);
            if (it != work.end()) pinned[name] = it->second;
        }
    }
    for (const auto& [name, value] : fixed) out.weights[name] = value;
    return out;
}

WeightSet apply_weights(WeightSet base, Regime regime, const WeightTable& t) {
    auto get = [&](const std::string& k) { return t.at(k); };
    switch (regime) {
        case Regime::subcubic: {
            WeightSet s = subcubic_weights(t);
            base.r = s.r;
            base.s = s.s;
            base.s3p = s.s3p;
            break;
        }
        case Regime::degree3:
            base.w[2] = get("w2");
            base.w[3] = get("w3");
            base.w2p = get("w2p");
            base.w3p = get("w3p");
            break;
        case Regime::degree4:
            for (int d = 2; d <= 4; ++d) base.w[static_cast<std::size_t>(d)] = get(degree4_key(5, d));
            base.psi = get("psi");
            break;
        case Regime::degree56:
            for (int d = 2; d <= 6; ++d) base.w[static_cast<std::size_t>(d)] = get("w" + std::to_string(d));
            break;
    }
    return base;
}

std::vector<ChainResult> optimize_chain(const OptimizeOptions& opt) {
    std::vector<ChainResult> out;
    WeightSet ctx = WeightSet::subcubic_default();
    for (Regime r : {Regime::subcubic, Regime::degree3, Regime::degree4, Regime::degree56}) {
        ChainResult step{r, optimize_weights(generate_constraints(r, ctx), {}, opt), ctx};
        ctx = apply_weights(ctx, r, step.result.weights);
        out.push_back(std::move(step));
    }
    return out;
}

}  // namespace iscount
