#include "iscount/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iscount {

Graph::Graph(int capacity) : adj_(capacity), live_(capacity, 1), vertices_(capacity) {
    if (capacity < 0) throw std::invalid_argument("negative vertex count");
    for (int v = 0; v < capacity; ++v) vertices_[v] = v;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v))
        throw std::invalid_argument("edge endpoint is not a vertex");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex target = &a == &adj_[u] ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u : vertices_)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v : vertices_) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (vertices_.empty()) return 0;
    int d = degree(vertices_.front());
    for (Vertex v : vertices_) d = std::min(d, degree(v));
    return d;
}

Graph Graph::restrict(std::span<const Vertex> removed) const {
    std::vector<std::uint8_t> gone(live_.size(), 0);
    for (Vertex v : removed)
        if (contains(v)) gone[v] = 1;
    Graph h;
    h.adj_.resize(adj_.size());
    h.live_.assign(live_.size(), 0);
    h.vertices_.reserve(vertices_.size());
    int degree_sum = 0;
    for (Vertex v : vertices_) {
        if (gone[v]) continue;
        h.live_[v] = 1;
        h.vertices_.push_back(v);
        auto& out = h.adj_[v];
        out.reserve(adj_[v].size());
        for (Vertex u : adj_[v])
            if (!gone[u]) out.push_back(u);
        degree_sum += static_cast<int>(out.size());
    }
    h.edges_ = degree_sum / 2;
    return h;
}

Graph Graph::induced(std::span<const Vertex> kept) const {
    std::vector<std::uint8_t> keep(live_.size(), 0);
    for (Vertex v : kept)
        if (contains(v)) keep[v] = 1;
    std::vector<Vertex> removed;
    for (Vertex v : vertices_)
        if (!keep[v]) removed.push_back(v);
    return restrict(removed);
}

void Graph::audit() const {
    int degree_sum = 0;
    Vertex prev = -1;
    for (Vertex v : vertices_) {
        if (!contains(v) || v <= prev) throw std::logic_error("vertex list out of order");
        prev = v;
        const auto& a = adj_[v];
        for (std::size_t i = 0; i < a.size(); ++i) {
            Vertex u = a[i];
            if (!contains(u)) throw std::logic_error("edge to a deleted vertex");
            if (u == v) throw std::logic_error("self-loop");
            if (i > 0 && a[i - 1] >= u) throw std::logic_error("adjacency not strictly sorted");
            if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v))
                throw std::logic_error("asymmetric adjacency");
        }
        degree_sum += static_cast<int>(a.size());
    }
    if (degree_sum != 2 * edges_) throw std::logic_error("edge count mismatch");
    int live_count = 0;
    for (std::size_t v = 0; v < live_.size(); ++v) {
        if (live_[v]) ++live_count;
        else if (!adj_[v].empty()) throw std::logic_error("deleted vertex keeps neighbours");
    }
    if (live_count != vertex_count()) throw std::logic_error("live flags out of sync");
}

bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && [&] {
        for (Vertex v : a.vertices_)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }();
}

Rational average_degree(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("empty graph");
    Rational d(2 * g.edge_count(), g.vertex_count());
    d.canonicalize();
    return d;
}

VertexScore associated_average_degree(const Graph& g, Vertex x, const Rational& k) {
    if (!g.contains(x)) throw std::invalid_argument("vertex not in graph");
    VertexScore s;
    s.alpha = g.degree(x);
    s.beta = 1;
    for (Vertex y : g.neighbors(x)) {
        if (Rational(g.degree(y)) < k) {
            s.alpha += 1;
            s.beta += Rational(1, g.degree(y));
        }
    }
    s.beta.canonicalize();
    s.score = Rational(s.alpha) / s.beta;
    return s;
}

VertexScore associated_average_degree(const Graph& g, Vertex x) {
    return associated_average_degree(g, x, average_degree(g));
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    std::vector<Vertex> stack;
    for (Vertex root : g.vertices()) {
        if (seen[root]) continue;
        std::vector<Vertex> comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph restrict(const Graph& g, std::span<const Vertex> removed) { return g.restrict(removed); }

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<Vertex> articulation_points(const Graph& g) {
    const int cap = g.capacity();
    std::vector<int> disc(cap, -1), low(cap, 0);
    std::vector<std::uint8_t> cut(cap, 0);
    int timer = 0;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };
    std::vector<Frame> stack;
    for (Vertex root : g.vertices()) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex u = nb[f.next++];
                if (u == f.parent) continue;
                if (disc[u] >= 0) {
                    low[f.v] = std::min(low[f.v], disc[u]);
                } else {
                    disc[u] = low[u] = timer++;
                    ++f.children;
                    stack.push_back({u, f.v, 0, 0});
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) cut[done.v] = 1;
            } else {
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (p.parent != -1 && low[done.v] >= disc[p.v]) cut[p.v] = 1;
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v : g.vertices())
        if (cut[v]) out.push_back(v);
    return out;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.capacity(), -1);
    std::vector<Vertex> queue;
    for (Vertex root : g.vertices()) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        queue.assign(1, root);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            for (Vertex u : g.neighbors(v)) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_333_vertex(const Graph& g, Vertex v) {
    if (g.degree(v) != 3) return false;
    for (Vertex u : g.neighbors(v))
        if (g.degree(u) != 3) return false;
    return true;
}

bool has_333_vertex(const Graph& g) {
    for (Vertex v : g.vertices())
        if (is_333_vertex(g, v)) return true;
    return false;
}

}  // namespace iscount
