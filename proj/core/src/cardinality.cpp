#include "iscount/cardinality.hpp"

#include <stdexcept>

namespace iscount {

const BigInt& CardinalityFunction::one() {
    static const BigInt value = 1;
    return value;
}

void CardinalityFunction::grow(Vertex v) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    if (v >= size()) {
        out_.resize(v + 1, 1);
        in_.resize(v + 1, 1);
    }
}

void CardinalityFunction::set(Vertex v, BigInt c_out, BigInt c_in) {
    if (c_out < 0 || c_in < 0) throw std::invalid_argument("cardinality values must be non-negative");
    grow(v);
    out_[v] = std::move(c_out);
    in_[v] = std::move(c_in);
}

void CardinalityFunction::scale(Vertex v, const BigInt& out_factor, const BigInt& in_factor) {
    grow(v);
    out_[v] *= out_factor;
    in_[v] *= in_factor;
}

bool CardinalityFunction::is_unit() const {
    for (int v = 0; v < size(); ++v)
        if (out_[v] != 1 || in_[v] != 1) return false;
    return true;
}

}  // namespace iscount
