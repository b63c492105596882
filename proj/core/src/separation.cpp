#include "iscount/separation.hpp"

#include "iscount/measure.hpp"

#include <stdexcept>

namespace iscount {

Separation Separation::all(const Graph& g, Side side) {
    Separation sep;
    sep.sides_.assign(g.capacity(), Side::none);
    for (Vertex v : g.vertices()) sep.sides_[v] = side;
    return sep;
}

void Separation::assign(Vertex v, Side s) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    if (v >= static_cast<Vertex>(sides_.size())) sides_.resize(v + 1, Side::none);
    sides_[v] = s;
}

std::vector<Vertex> Separation::members(Side s) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(sides_.size()); ++v)
        if (sides_[v] == s) out.push_back(v);
    return out;
}

int Separation::count(Side s) const {
    int c = 0;
    for (Side x : sides_) c += x == s;
    return c;
}

Separation Separation::restricted(const Graph& g) const {
    Separation out;
    out.sides_.assign(g.capacity(), Side::none);
    for (Vertex v : g.vertices()) out.sides_[v] = side(v);
    return out;
}

void Separation::swap_sides() {
    for (Side& s : sides_) s = opposite(s);
    for (auto& sp : spiders_) {
        if (sp.kind == SpiderKind::left) sp.kind = SpiderKind::right;
        else if (sp.kind == SpiderKind::right) sp.kind = SpiderKind::left;
    }
}

const SpiderClassification& Separation::spider(Vertex v) const {
    static const SpiderClassification none;
    return v >= 0 && v < static_cast<Vertex>(spiders_.size()) ? spiders_[v] : none;
}

void Separation::set_spider(Vertex v, SpiderClassification c) {
    if (v >= static_cast<Vertex>(spiders_.size())) spiders_.resize(v + 1);
    spiders_[v] = c;
}

Side opposite(Side s) {
    if (s == Side::left) return Side::right;
    if (s == Side::right) return Side::left;
    return s;
}

bool is_valid_separation(const Graph& g, const Separation& sep) {
    for (Vertex v : g.vertices()) {
        Side s = sep.side(v);
        if (s == Side::none) return false;
        if (s == Side::separator) continue;
        for (Vertex u : g.neighbors(v))
            if (sep.side(u) == opposite(s)) return false;
    }
    return true;
}

double mu_r(const Graph& g, const Separation& sep, Side side, const WeightSet& w) {
    double total = 0.0;
    for (Vertex v : g.vertices())
        if (sep.side(v) == side) total += w.r_of(g.degree(v));
    return total;
}

bool is_balanced(const Graph& g, const Separation& sep, const WeightSet& w) {
    return mu_r(g, sep, Side::right, w) - mu_r(g, sep, Side::left, w) <= 2.0 * w.balance();
}

}  // namespace iscount
