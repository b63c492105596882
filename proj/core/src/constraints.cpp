#include "iscount/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace iscount {

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::subcubic: return "subcubic-8/3";
        case Regime::degree3: return "degree-3";
        case Regime::degree4: return "degree-4";
        case Regime::degree56: return "degree-5-6";
    }
    return "unknown";
}

std::optional<Regime> parse_regime(std::string_view text) {
    if (text == "subcubic-8/3" || text == "subcubic") return Regime::subcubic;
    if (text == "degree-3") return Regime::degree3;
    if (text == "degree-4") return Regime::degree4;
    if (text == "degree-5-6" || text == "degree-4-6") return Regime::degree56;
    return std::nullopt;
}

LinearForm LinearForm::var(const std::string& name, double coef) {
    LinearForm f;
    f.terms[name] = coef;
    return f;
}

LinearForm LinearForm::value(double c) {
    LinearForm f;
    f.constant = c;
    return f;
}

double LinearForm::eval(const WeightTable& t) const {
    double v = constant;
    for (const auto& [name, coef] : terms) {
        auto it = t.find(name);
        if (it == t.end()) throw std::out_of_range("weight '" + name + "' is missing");
        v += coef * it->second;
    }
    return v;
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (const auto& [name, coef] : terms) {
        if (coef == 0.0) continue;
        if (!first) os << (coef < 0 ? " - " : " + ");
        else if (coef < 0) os << "-";
        double a = std::fabs(coef);
        if (a != 1.0) os << a << "*";
        os << name;
        first = false;
    }
    if (constant != 0.0 || first) {
        if (!first) os << (constant < 0 ? " - " : " + ") << std::fabs(constant);
        else os << constant;
    }
    return os.str();
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (const auto& [name, coef] : o.terms) terms[name] += coef;
    constant += o.constant;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    for (const auto& [name, coef] : o.terms) terms[name] -= coef;
    constant -= o.constant;
    return *this;
}

LinearForm& LinearForm::operator*=(double k) {
    for (auto& [name, coef] : terms) coef *= k;
    constant *= k;
    return *this;
}

LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
LinearForm operator*(double k, LinearForm a) { return a *= k; }

BranchingVector BranchingConstraint::at(const WeightTable& t) const {
    BranchingVector v;
    v.label = label;
    for (const auto& d : deltas) v.deltas.push_back(d.eval(t));
    return v;
}

double OptimizationStage::value(const WeightTable& t) const {
    double best = -INFINITY;
    for (const auto& f : objective) best = std::max(best, f.eval(t));
    return best;
}

std::string ConstraintSystem::to_text() const {
    std::ostringstream os;
    for (const auto& c : linear)
        os << "linear " << c.label << " [" << c.group << "]: " << c.form.to_string()
           << (c.rel == Relation::eq ? " = 0" : " <= 0") << "\n";
    for (const auto& b : branching) {
        os << "branch " << b.label << " [" << b.group << "]: (";
        for (std::size_t i = 0; i < b.deltas.size(); ++i) os << (i ? ", " : "") << b.deltas[i].to_string();
        os << ")\n";
    }
    for (const auto& s : stages) {
        os << "minimise " << s.label << ": max(";
        for (std::size_t i = 0; i < s.objective.size(); ++i) os << (i ? ", " : "") << s.objective[i].to_string();
        os << ")\n";
    }
    return os.str();
}

std::string degree4_key(int row, int degree) {
    return "row" + std::to_string(row) + ".w" + std::to_string(degree);
}

double row_envelope(double w2, double w3, double w4, double d) {
    const double xs[3] = {2.0, 3.0, 4.0};
    const double ys[3] = {w2, w3, w4};
    double best = -INFINITY;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            if (d < xs[i] - 1e-12 || d > xs[j] + 1e-12) continue;
            if (i == j) {
                best = std::max(best, ys[i]);
                continue;
            }
            double t = (d - xs[i]) / (xs[j] - xs[i]);
            best = std::max(best, (1 - t) * ys[i] + t * ys[j]);
        }
    return best;
}

namespace {

using LF = LinearForm;
LF v(const std::string& name, double coef = 1.0) { return LF::var(name, coef); }
LF k(double c) { return LF::value(c); }

struct Builder {
    ConstraintSystem cs;

    void le(std::string label, LF form, int group = 0) {
        cs.linear.push_back({std::move(label), std::move(form), Relation::le, group});
    }
    void eq(std::string label, LF form, int group = 0) {
        cs.linear.push_back({std::move(label), std::move(form), Relation::eq, group});
    }
    void branch(std::string label, std::vector<LF> deltas, int group = 0) {
        cs.branching.push_back({std::move(label), std::move(deltas), group});
    }
    void symmetric(std::string label, const LF& d, int group = 0) { branch(std::move(label), {d, d}, group); }
};

ConstraintSystem subcubic_system() {
    Builder b;
    b.cs.variables = {"r0", "r1", "r2", "r3", "s0", "s1", "s2", "s3", "s3p"};
    for (const char* name : {"r0", "r1", "s0", "s1", "r2"}) b.eq(std::string("zero ") + name, v(name));
    b.le("monotone r2 <= r3", v("r2") - v("r3"));
    b.le("monotone s1 <= s2", v("s1") - v("s2"));
    b.le("monotone s2 <= s3", v("s2") - v("s3"));
    b.le("non-negative s3p", v("s3p", -1));
    for (int d : {2, 3}) {
        std::string r = "r" + std::to_string(d), s = "s" + std::to_string(d);
        b.le("drag right, balanced, degree " + std::to_string(d), v(s, -1) + v(r));
        b.le("drag left, imbalanced, degree " + std::to_string(d), v(s, -1) + v(r, 0.5));
    }
    b.le("drag right, balanced, spider", v("s3p", -1) + v("r3"));
    b.le("drag left, imbalanced, spider", v("s3p", -1) + v("r3", 0.5));
    b.le("balanced 2-path drag", v("s2", -1) + v("s3p") + 0.5 * (v("r2") - v("r3")));
    b.le("imbalanced 2-path drag", v("s2", -1) + v("s3p") - v("r3"));
    b.le("no anchored left neighbour", v("s3", -1) + v("r3", 2));
    b.le("no anchored right neighbour", v("s3", -1));
    b.le("new separation", v("s3p", 1.0 / 6) + v("r3", 5.0 / 12) - v("r3"));
    const LF at2 = v("r2", 0.5);
    const LF at2811 = v("s3p", 1.0 / 11) + v("r3", 5.0 / 22) + v("r2", 5.0 / 22);
    const LF at83 = v("s3", 1.0 / 9) + v("r3", 5.0 / 18) + v("r2", 1.0 / 3);
    b.le("bound maximal at 28/11 over 2", at2 - at2811);
    b.le("bound maximal at 8/3 over 28/11", at2811 - at83);

    const LF dr3 = v("r3") - v("r2");
    const LF ds3 = v("s3") - v("s2");
    const LF delta = v("s3p") - v("s3");
    b.le("spider offset below separator step", delta - ds3);
    b.le("separator step below half right step", ds3 - 0.5 * dr3);

    const LF s3 = v("s3"), r3 = v("r3"), sp = v("s3p");
    b.symmetric("spider center pair", sp + 0.5 * (r3 + 2 * dr3));
    b.symmetric("spider branch", sp + 1.5 * dr3);
    b.symmetric("balanced lazy 2-separator", s3 + 0.5 * (2 * r3 + 2 * dr3) - 2 * delta);
    b.symmetric("imbalanced lazy 2-separator", s3 + 2 * r3);
    const LF first = s3 + ds3 + 0.5 * (2 * dr3) - 3 * delta;
    b.branch("balanced, neighbour in separator", {first, 2 * s3 + 0.5 * (2 * dr3) - 2 * delta});
    b.branch("balanced (2,2,3)", {first, s3 + 2 * ds3 + 0.5 * (r3 + 2 * dr3) - 4 * delta});
    b.branch("balanced (2,3,3)", {first, s3 + 3 * ds3 + 0.5 * (2 * r3 + 2 * dr3) - 5 * delta});
    b.branch("imbalanced, neighbour in separator", {s3 + ds3 + r3 - 3 * delta, 2 * s3 + r3 + 5 * delta});
    b.symmetric("imbalanced, right skeleton neighbour", r3 + s3 + dr3 + ds3 - 3 * delta);
    b.branch("imbalanced branch", {s3 + 2 * dr3 - 3 * delta, s3 + 2 * dr3 - 4 * delta});

    b.cs.stages.push_back({"mu_8/3 per vertex", {v("s3", 1.0 / 9) + v("r3", 5.0 / 18) + v("r2", 1.0 / 6)}, {0}, {}});
    return b.cs;
}

ConstraintSystem degree3_system(const WeightSet& ctx) {
    Builder b;
    b.cs.variables = {"w2", "w3", "w2p", "w3p"};
    const double r2 = ctx.r[2], r3 = ctx.r[3], s3 = ctx.s[3], sp = ctx.s3p;
    for (const char* name : {"w2", "w3", "w2p", "w3p"}) b.le(std::string("non-negative ") + name, v(name, -1));
    b.le("pivot at 2", k(r2 / 2) - v("w2"));
    b.le("pivot at 28/11", k(sp / 11 + 5 * r3 / 22 + 5 * r2 / 22) - v("w3", 6.0 / 11) - v("w2", 5.0 / 11));
    b.le("pivot at 8/3", k(s3 / 9 + 5 * r3 / 18 + r2 / 3) - v("w3", 2.0 / 3) - v("w2", 1.0 / 3));
    b.le("compound link at 8/3", v("w3", 2) + v("w2") - v("w3p", 2) - v("w2p"));
    b.branch("(3,3,3) branch", {v("w3p", 4) - v("w2p", 3), v("w3p", 8) - v("w2p", 4)});
    b.cs.stages.push_back({"w3' (degree-3 time exponent)", {v("w3p")}, {0}, {}});
    return b.cs;
}

// Branching vectors of the degree-4 table as (w2, w3, w4, ψ) coefficients, with
// the highest average degree at which the case can occur.
struct Degree4Case {
    const char* name;
    double top;
    double a[4];
    double b[4];
};

constexpr Degree4Case degree4_cases[] = {
    {"(2,2,2,2) all 2-paths end in degree 4", 3.0, {4, -4, 5, -1}, {4, -4, 5, -1}},
    {"(2,2,2,2) a 2-path ends in degree 3", 3.0, {3, -2, 4, 1}, {3, -2, 4, 1}},
    {"(2,2,2,3)", 3.0, {2, -2, 4, 0}, {3, -2, 4, 0}},
    {"(2,2,2,4)", 3.0, {3, -4, 5, 0}, {3, -4, 6, 0}},
    {"(2,2,3,3)", 3.0, {0, 0, 3, 0}, {2, -2, 5, 0}},
    {"(2,2,3,4)", 3.0, {1, -2, 4, 0}, {2, -2, 5, 0}},
    {"(2,2,4,4)", 3.0, {2, -4, 5, 0}, {2, -4, 7, 0}},
    {"(2,3,3,3)", 16.0 / 5, {-2, 2, 2, 0}, {1, 0, 4, 0}},
    {"(2,3,3,4)", 42.0 / 13, {-1, 0, 3, 0}, {1, -2, 6, 0}},
    {"(2,3,4,4)", 36.0 / 11, {0, -2, 4, 0}, {1, -2, 6, 0}},
    {"(2,4,4,4)", 10.0 / 3, {1, -4, 5, 0}, {1, -4, 8, 0}},
    {"(3,3,3,3)", 24.0 / 7, {-4, 4, 1, 0}, {0, 0, 5, 0}},
    {"(3,3,3,4)", 3.5, {-3, 2, 2, 0}, {0, 0, 5, 0}},
    {"(3,3,4,4)", 3.6, {-2, 0, 3, 0}, {0, -2, 7, 0}},
    {"(3,4,4,4)", 3.75, {-1, -2, 4, 0}, {0, -2, 7, 0}},
    {"(4,4,4,4)", 4.0, {0, -4, 5, 0}, {0, -4, 9, 0}},
};

std::vector<LF> envelope_forms(int row, double d) {
    std::vector<LF> out;
    const double xs[3] = {2.0, 3.0, 4.0};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            if (d < xs[i] - 1e-12 || d > xs[j] + 1e-12) continue;
            if (i == j) {
                out.push_back(v(degree4_key(row, i + 2)));
                continue;
            }
            double t = (d - xs[i]) / (xs[j] - xs[i]);
            out.push_back(v(degree4_key(row, i + 2), 1 - t) + v(degree4_key(row, j + 2), t));
        }
    return out;
}

ConstraintSystem degree4_system(const WeightSet& ctx) {
    Builder b;
    for (int row = 1; row <= 5; ++row)
        for (int d = 2; d <= 4; ++d) b.cs.variables.push_back(degree4_key(row, d));
    b.cs.variables.push_back("psi");

    b.eq("row 1 w2 = w2'", v(degree4_key(1, 2)) - k(ctx.w2p), 1);
    b.eq("row 1 w3 = w3'", v(degree4_key(1, 3)) - k(ctx.w3p), 1);
    for (int row = 1; row <= 5; ++row) {
        const std::string tag = "row " + std::to_string(row) + " ";
        auto w = [&](int d) { return v(degree4_key(row, d)); };
        b.le(tag + "non-negative w2", -1 * w(2), row);
        b.le(tag + "monotone w2 <= w3", w(2) - w(3), row);
        b.le(tag + "monotone w3 <= w4", w(3) - w(4), row);
        if (row > 1) {
            // consecutive rows agree on every graph whose average degree is the pivot
            const double p = degree4_lower[row - 1];
            auto diff = [&](int d) { return v(degree4_key(row, d)) - v(degree4_key(row - 1, d)); };
            b.eq(tag + "pivot " + std::to_string(p).substr(0, 4) + " (w2)", (4 - p) * diff(2) - (2 - p) * diff(4), row);
            b.eq(tag + "pivot " + std::to_string(p).substr(0, 4) + " (w3)", (4 - p) * diff(3) - (3 - p) * diff(4), row);
            b.le(tag + "w4 does not grow", diff(4), row);
        }
        for (const auto& c : degree4_cases) {
            if (c.top <= degree4_lower[row - 1] + 1e-12) continue;
            auto form = [&](const double* co) {
                LF f = co[0] * w(2) + co[1] * w(3) + co[2] * w(4);
                if (co[3] != 0) f += v("psi", co[3]);
                return f;
            };
            b.branch(tag + c.name, {form(c.a), form(c.b)}, row);
        }
    }
    for (int row = 2; row <= 5; ++row) {
        OptimizationStage st;
        st.label = "row " + std::to_string(row) + " time exponent";
        st.objective = envelope_forms(row, degree4_upper[row - 1]);
        for (int g = 1; g <= row; ++g) st.groups.push_back(g);
        for (int r = 1; r <= row; ++r)
            for (int d = 2; d <= 4; ++d) st.pin_after.push_back(degree4_key(r, d));
        st.pin_after.push_back("psi");
        b.cs.stages.push_back(std::move(st));
    }
    return b.cs;
}

void multisets(int size, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int d = cur.empty() ? lo : cur.back(); d <= hi; ++d) {
        cur.push_back(d);
        multisets(size, lo, hi, cur, out);
        cur.pop_back();
    }
}

ConstraintSystem degree56_system(const WeightSet& ctx) {
    Builder b;
    b.cs.variables = {"w2", "w3", "w4", "w5", "w6"};
    auto w = [](int d) { return d <= 1 ? k(0) : v("w" + std::to_string(d)); };
    auto dw = [&](int d) { return w(d) - w(d - 1); };
    b.le("non-negative w2", v("w2", -1));
    for (int d = 3; d <= 6; ++d) b.le("monotone w" + std::to_string(d - 1) + " <= w" + std::to_string(d), -1.0 * dw(d));
    for (int d = 2; d <= 4; ++d)
        b.le("w" + std::to_string(d) + " at least the degree-4 value", k(ctx.w[d]) - w(d));
    for (int dv = 5; dv <= 6; ++dv) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        multisets(dv, 2, dv, cur, all);
        for (const auto& nd : all) {
            if (std::all_of(nd.begin(), nd.end(), [&](int d) { return d == dv; })) continue;
            const auto p = NeighborProfile::of(nd);
            LF in = w(dv) + static_cast<double>(p.out_v) * dw(dv);
            LF out = w(dv) + static_cast<double>(p.deg2_v) * dw(dv);
            for (int d : nd) {
                in += w(d);
                out += dw(d);
            }
            std::string label = "degree " + std::to_string(dv) + " (";
            for (std::size_t i = 0; i < nd.size(); ++i) label += (i ? "," : "") + std::to_string(nd[i]);
            b.branch(label + ")", {in, out});
        }
    }
    b.cs.stages.push_back({"w6 (time exponent)", {v("w6")}, {0}, {}});
    return b.cs;
}

}  // namespace

ConstraintSystem generate_constraints(Regime regime, const WeightSet& context) {
    ConstraintSystem cs;
    switch (regime) {
        case Regime::subcubic: cs = subcubic_system(); break;
        case Regime::degree3: cs = degree3_system(context); break;
        case Regime::degree4: cs = degree4_system(context); break;
        case Regime::degree56: cs = degree56_system(context); break;
        default: throw std::invalid_argument("unknown regime");
    }
    cs.regime = regime;
    return cs;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.ok; });
}

std::vector<ConstraintCheck> VerifyReport::violations() const {
    std::vector<ConstraintCheck> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c);
    return out;
}

double VerifyReport::worst_slack() const {
    double w = INFINITY;
    for (const auto& c : checks) w = std::min(w, c.slack);
    return w;
}

VerifyReport verify_weights(const ConstraintSystem& cs, const WeightTable& t, double tolerance) {
    VerifyReport rep;
    rep.tolerance = tolerance;
    for (const auto& c : cs.linear) {
        double value = c.form.eval(t);
        double slack = c.rel == Relation::eq ? -std::fabs(value) : -value;
        rep.checks.push_back({c.label, false, slack, slack >= -tolerance});
    }
    for (const auto& b : cs.branching) {
        double slack = 1.0 - b.at(t).power_sum(2.0);
        rep.checks.push_back({b.label, true, slack, slack >= -tolerance});
    }
    return rep;
}

WeightTable subcubic_table(const WeightSet& w) {
    WeightTable t;
    for (int i = 0; i < 4; ++i) {
        t["r" + std::to_string(i)] = w.r[i];
        t["s" + std::to_string(i)] = w.s[i];
    }
    t["s3p"] = w.s3p;
    return t;
}

WeightSet subcubic_weights(const WeightTable& t) {
    WeightSet w;
    for (int i = 0; i < 4; ++i) {
        w.r[i] = t.at("r" + std::to_string(i));
        w.s[i] = t.at("s" + std::to_string(i));
    }
    w.s3p = t.at("s3p");
    return w;
}

WeightTable degree3_table(const WeightSet& w) {
    return {{"w2", w.w[2]}, {"w3", w.w[3]}, {"w2p", w.w2p}, {"w3p", w.w3p}};
}

}  // namespace iscount
