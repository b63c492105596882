#pragma once

#include "iscount/graph.hpp"

#include <gmpxx.h>

#include <vector>

namespace iscount {

using BigInt = mpz_class;

// Per-id pair (c_out, c_in); ids never set read as (1, 1).
class CardinalityFunction {
public:
    CardinalityFunction() = default;
    explicit CardinalityFunction(int capacity) : out_(capacity, 1), in_(capacity, 1) {}

    static CardinalityFunction unit(const Graph& g) { return CardinalityFunction(g.capacity()); }

    const BigInt& out(Vertex v) const { return v < size() ? out_[v] : one(); }
    const BigInt& in(Vertex v) const { return v < size() ? in_[v] : one(); }

    void set(Vertex v, BigInt c_out, BigInt c_in);
    void scale(Vertex v, const BigInt& out_factor, const BigInt& in_factor);

    bool is_unit() const;

private:
    int size() const { return static_cast<int>(out_.size()); }
    void grow(Vertex v);
    static const BigInt& one();

    std::vector<BigInt> out_;
    std::vector<BigInt> in_;
};

}  // namespace iscount
