#pragma once

#include "iscount/graph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iscount {

enum class ParseErrorKind {
    malformed_header,
    missing_header,
    malformed_line,
    index_out_of_range,
    edge_count_mismatch,
    self_loop,
    duplicate_edge,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

// DIMACS "p edge n m" with 1-based "e u v" lines.
Graph parse_dimacs(std::string_view text);
// First line "n m", then one "u v" pair per line, 0-based.
Graph parse_edge_list(std::string_view text);
// Picks the format from the first non-comment line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// Writes DIMACS; ids are compacted in increasing order and shifted to 1-based.
std::string to_dimacs(const Graph& g);

struct GraphSpec {
    enum class Kind { named, gnp, random_cubic, random_subcubic };
    Kind kind = Kind::named;
    std::string name;
    std::vector<int> args;
    int n = 0;
    double p = 0.0;          // edge probability, or subdivision fraction
    bool no333 = false;
    std::uint64_t seed = 1;
};

// "petersen", "path(5)", "cycle(7)", "complete(4)", "empty(3)", "theta(2,2,2)",
// "gnp(12,0.3)", "random-cubic(20)", "random-subcubic(20,0.3)", "no333(20)".
// A trailing ",seed" argument on the random kinds overrides `default_seed`.
GraphSpec parse_graph_spec(std::string_view text, std::uint64_t default_seed = 1);
Graph generate(const GraphSpec& spec);

Graph petersen_graph();
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph theta_graph(int a, int b, int c);
Graph gnp_graph(int n, double p, std::uint64_t seed);
Graph random_cubic_graph(int n, std::uint64_t seed);
// Random cubic base on `base_n` vertices with a fraction of edges subdivided; with
// `no333` every degree-3 vertex gets at least one degree-2 neighbour.
Graph random_subcubic_graph(int base_n, double fraction, bool no333, std::uint64_t seed);

// Draws that depend only on the 64-bit engine output, so a seed means the same
// graph on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);
    double unit();
    bool chance(double p) { return unit() < p; }
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace iscount
