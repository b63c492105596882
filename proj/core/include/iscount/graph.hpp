#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace iscount {

using Vertex = std::int32_t;
using Rational = mpq_class;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph over stable integer ids. Deleted ids stay reserved,
// so any per-id table built for the parent stays valid for derived graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int capacity);

    static Graph from_edges(int n, std::span<const Edge> edges);

    // Throws std::invalid_argument on self-loops, duplicates or dead endpoints.
    void add_edge(Vertex u, Vertex v);

    int capacity() const { return static_cast<int>(live_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return edges_; }
    bool empty() const { return vertices_.empty(); }

    bool contains(Vertex v) const { return v >= 0 && v < capacity() && live_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    // Live ids in increasing order.
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::vector<Edge> edges() const;

    int max_degree() const;
    int min_degree() const;

    Graph restrict(std::span<const Vertex> removed) const;
    Graph induced(std::span<const Vertex> kept) const;

    // Throws std::logic_error when symmetry, simplicity or bookkeeping is broken.
    void audit() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> live_;
    std::vector<Vertex> vertices_;
    int edges_ = 0;
};

struct VertexScore {
    int alpha = 0;
    Rational beta;
    Rational score;
};

Rational average_degree(const Graph& g);
VertexScore associated_average_degree(const Graph& g, Vertex x);
VertexScore associated_average_degree(const Graph& g, Vertex x, const Rational& k);

std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
Graph restrict(const Graph& g, std::span<const Vertex> removed);

// Closed neighbourhood, sorted.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

// Cut vertices in increasing id order.
std::vector<Vertex> articulation_points(const Graph& g);

bool is_bipartite(const Graph& g);

// True when v has degree 3 and all three neighbours have degree 3.
bool is_333_vertex(const Graph& g, Vertex v);
bool has_333_vertex(const Graph& g);

}  // namespace iscount
