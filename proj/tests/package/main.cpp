#include <iscount/solver.hpp>
#include <iscount/graph_io.hpp>

int main() {
    auto res = iscount::count_independent_sets(iscount::petersen_graph());
    return res.count == 76 ? 0 : 1;
}
