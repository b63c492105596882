#pragma once

#include "iscount/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace iscount {

struct WeightSet;

enum class Side : std::uint8_t { none, left, separator, right };

enum class SpiderKind : std::uint8_t { none, left, right, center };

struct SpiderClassification {
    SpiderKind kind = SpiderKind::none;
    std::optional<Vertex> partner;
    bool weight_bearer = false;  // carries s_3'
};

// Partition (L, S, R) keyed by vertex id. Ids outside the graph read as Side::none.
class Separation {
public:
    Separation() = default;

    static Separation all(const Graph& g, Side side);

    Side side(Vertex v) const { return v < static_cast<Vertex>(sides_.size()) ? sides_[v] : Side::none; }
    void assign(Vertex v, Side s);

    bool in(Vertex v, Side s) const { return side(v) == s; }
    std::vector<Vertex> members(Side s) const;
    int count(Side s) const;
    bool separator_empty() const { return count(Side::separator) == 0; }

    // Sides of ids no longer live in `g` become Side::none; spider data is dropped.
    Separation restricted(const Graph& g) const;
    void swap_sides();

    const SpiderClassification& spider(Vertex v) const;
    void set_spider(Vertex v, SpiderClassification c);
    void clear_spiders() { spiders_.clear(); }
    bool spiders_classified() const { return classified_; }
    void mark_classified() { classified_ = true; }

private:
    std::vector<Side> sides_;
    std::vector<SpiderClassification> spiders_;
    bool classified_ = false;
};

// Every live vertex on exactly one side and no edge between L and R.
bool is_valid_separation(const Graph& g, const Separation& sep);

Side opposite(Side s);

// Σ r_{d(v)} over the vertices on `side`, degrees taken in g and capped at 3.
double mu_r(const Graph& g, const Separation& sep, Side side, const WeightSet& w);

// μ_r(R) − μ_r(L) ≤ 2B; callers orient the separation first.
bool is_balanced(const Graph& g, const Separation& sep, const WeightSet& w);

}  // namespace iscount
