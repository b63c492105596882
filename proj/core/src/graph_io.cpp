#include "iscount/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace iscount {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_int(std::string_view s, long long& out) {
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool is_comment(std::string_view line) {
    auto t = tokens(line);
    return t.empty() || t[0][0] == 'c' || t[0][0] == '#' || t[0][0] == '%';
}

class EdgeCollector {
public:
    void start(long long n, long long m, int line) {
        if (n < 0 || m < 0 || n > (1 << 26))
            throw ParseError(ParseErrorKind::malformed_header, line, "bad vertex or edge count");
        n_ = static_cast<int>(n);
        m_ = m;
        header_line_ = line;
    }
    void add(long long u, long long v, int line) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ParseError(ParseErrorKind::index_out_of_range, line, "vertex index out of range");
        if (u == v) throw ParseError(ParseErrorKind::self_loop, line, "self-loop");
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen_.insert(e).second) throw ParseError(ParseErrorKind::duplicate_edge, line, "duplicate edge");
        edges_.push_back(e);
    }
    Graph finish() const {
        if (static_cast<long long>(edges_.size()) != m_)
            throw ParseError(ParseErrorKind::edge_count_mismatch, header_line_,
                             "header announces " + std::to_string(m_) + " edges, found " +
                                 std::to_string(edges_.size()));
        return Graph::from_edges(n_, edges_);
    }

private:
    int n_ = 0;
    long long m_ = 0;
    int header_line_ = 0;
    std::vector<Edge> edges_;
    std::set<Edge> seen_;
};

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::malformed_header: return "malformed header";
        case ParseErrorKind::missing_header: return "missing header";
        case ParseErrorKind::malformed_line: return "malformed line";
        case ParseErrorKind::index_out_of_range: return "index out of range";
        case ParseErrorKind::edge_count_mismatch: return "edge-count mismatch";
        case ParseErrorKind::self_loop: return "self-loop";
        case ParseErrorKind::duplicate_edge: return "duplicate edge";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

Graph parse_dimacs(std::string_view text) {
    auto lines = split_lines(text);
    EdgeCollector edges;
    bool header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto t = tokens(lines[i]);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            long long n = 0, m = 0;
            if (header || t.size() != 4 || (t[1] != "edge" && t[1] != "col") || !to_int(t[2], n) ||
                !to_int(t[3], m))
                throw ParseError(ParseErrorKind::malformed_header, line_no, std::string(lines[i]));
            edges.start(n, m, line_no);
            header = true;
        } else if (t[0] == "e") {
            if (!header) throw ParseError(ParseErrorKind::missing_header, line_no, "edge before header");
            long long u = 0, v = 0;
            if (t.size() != 3 || !to_int(t[1], u) || !to_int(t[2], v))
                throw ParseError(ParseErrorKind::malformed_line, line_no, std::string(lines[i]));
            edges.add(u - 1, v - 1, line_no);
        } else {
            throw ParseError(ParseErrorKind::malformed_line, line_no, std::string(lines[i]));
        }
    }
    if (!header) throw ParseError(ParseErrorKind::missing_header, static_cast<int>(lines.size()), "");
    return edges.finish();
}

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    EdgeCollector edges;
    bool header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        if (is_comment(lines[i])) continue;
        auto t = tokens(lines[i]);
        long long a = 0, b = 0;
        bool ok = t.size() == 2 && to_int(t[0], a) && to_int(t[1], b);
        if (!header) {
            if (!ok) throw ParseError(ParseErrorKind::malformed_header, line_no, std::string(lines[i]));
            edges.start(a, b, line_no);
            header = true;
        } else {
            if (!ok) throw ParseError(ParseErrorKind::malformed_line, line_no, std::string(lines[i]));
            edges.add(a, b, line_no);
        }
    }
    if (!header) throw ParseError(ParseErrorKind::missing_header, static_cast<int>(lines.size()), "");
    return edges.finish();
}

Graph parse_graph(std::string_view text) {
    for (auto line : split_lines(text)) {
        auto t = tokens(line);
        if (t.empty() || t[0] == "c" || t[0][0] == '#' || t[0][0] == '%') continue;
        return t[0] == "p" ? parse_dimacs(text) : parse_edge_list(text);
    }
    throw ParseError(ParseErrorKind::missing_header, 1, "no content");
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string to_dimacs(const Graph& g) {
    std::vector<int> index(g.capacity(), -1);
    int next = 1;
    for (Vertex v : g.vertices()) index[v] = next++;
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << index[u] << ' ' << index[v] << '\n';
    return out.str();
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

Graph path_graph(int n) {
    if (n < 0) throw std::invalid_argument("path needs n >= 0");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete graph needs n >= 0");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph theta_graph(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("theta path lengths must be >= 0");
    if ((a == 0) + (b == 0) + (c == 0) > 1) throw std::invalid_argument("theta graph would have parallel edges");
    std::vector<Edge> e;
    int next = 2;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph::from_edges(next, e);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs n >= 0 and 0 <= p <= 1");
    Rng rng(seed);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

namespace {

std::vector<std::vector<Vertex>> random_cubic_adjacency(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("random cubic graph needs an even n >= 4");
    std::vector<Vertex> points(3 * n);
    while (true) {
        for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
        rng.shuffle(points);
        std::vector<std::vector<Vertex>> adj(n);
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            Vertex u = points[i], v = points[i + 1];
            if (u == v || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) simple = false;
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        if (simple) return adj;
    }
}

Graph from_adjacency(const std::vector<std::vector<Vertex>>& adj) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u)
        for (Vertex v : adj[u])
            if (u < v) e.emplace_back(u, v);
    return Graph::from_edges(static_cast<int>(adj.size()), e);
}

void subdivide(std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
    Vertex w = static_cast<Vertex>(adj.size());
    std::replace(adj[u].begin(), adj[u].end(), v, w);
    std::replace(adj[v].begin(), adj[v].end(), u, w);
    adj.push_back({u, v});
}

}  // namespace

Graph random_cubic_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    return from_adjacency(random_cubic_adjacency(n, rng));
}

Graph random_subcubic_graph(int base_n, double fraction, bool no333, std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0) throw std::invalid_argument("subdivision fraction must lie in [0,1]");
    Rng rng(seed);
    auto adj = random_cubic_adjacency(base_n, rng);
    std::vector<Edge> base;
    for (Vertex u = 0; u < base_n; ++u)
        for (Vertex v : adj[u])
            if (u < v) base.emplace_back(u, v);
    for (auto [u, v] : base)
        if (rng.chance(fraction)) subdivide(adj, u, v);
    if (no333) {
        std::vector<Vertex> order(base_n);
        for (int i = 0; i < base_n; ++i) order[i] = i;
        rng.shuffle(order);
        for (Vertex v : order) {
            bool has_degree2 = false;
            for (Vertex u : adj[v]) has_degree2 |= adj[u].size() == 2;
            if (has_degree2) continue;
            Vertex u = adj[v][rng.below(3)];
            subdivide(adj, v, u);
        }
    }
    return from_adjacency(adj);
}

namespace {

std::uint64_t parse_seed(std::string_view s) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad seed '" + std::string(s) + "'");
    return v;
}

int parse_count(std::string_view s) {
    long long v = 0;
    if (!to_int(s, v) || v < 0 || v > (1 << 24))
        throw std::invalid_argument("bad integer argument '" + std::string(s) + "'");
    return static_cast<int>(v);
}

double parse_real(std::string_view s) {
    try {
        std::size_t used = 0;
        double v = std::stod(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad real argument '" + std::string(s) + "'");
    }
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text, std::uint64_t default_seed) {
    GraphSpec spec;
    spec.seed = default_seed;
    std::string_view name = text;
    std::vector<std::string_view> args;
    if (auto open = text.find('('); open != std::string_view::npos) {
        if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
        name = text.substr(0, open);
        std::string_view inner = text.substr(open + 1, text.size() - open - 2);
        std::size_t start = 0;
        while (!inner.empty() && start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            if (comma == std::string_view::npos) comma = inner.size();
            auto arg = inner.substr(start, comma - start);
            while (!arg.empty() && arg.front() == ' ') arg.remove_prefix(1);
            while (!arg.empty() && arg.back() == ' ') arg.remove_suffix(1);
            args.push_back(arg);
            start = comma + 1;
        }
    }
    spec.name = std::string(name);
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("wrong number of arguments for '" + spec.name + "'");
    };
    if (name == "petersen") {
        need(0, 0);
    } else if (name == "path" || name == "cycle" || name == "complete" || name == "empty") {
        need(1, 1);
        spec.args = {parse_count(args[0])};
    } else if (name == "theta") {
        need(3, 3);
        spec.args = {parse_count(args[0]), parse_count(args[1]), parse_count(args[2])};
    } else if (name == "gnp") {
        need(2, 3);
        spec.kind = GraphSpec::Kind::gnp;
        spec.n = parse_count(args[0]);
        spec.p = parse_real(args[1]);
        if (args.size() == 3) spec.seed = parse_seed(args[2]);
    } else if (name == "random-cubic") {
        need(1, 2);
        spec.kind = GraphSpec::Kind::random_cubic;
        spec.n = parse_count(args[0]);
        if (args.size() == 2) spec.seed = parse_seed(args[1]);
    } else if (name == "random-subcubic") {
        need(2, 3);
        spec.kind = GraphSpec::Kind::random_subcubic;
        spec.n = parse_count(args[0]);
        spec.p = parse_real(args[1]);
        if (args.size() == 3) spec.seed = parse_seed(args[2]);
    } else if (name == "no333") {
        need(1, 2);
        spec.kind = GraphSpec::Kind::random_subcubic;
        spec.n = parse_count(args[0]);
        spec.no333 = true;
        if (args.size() == 2) spec.seed = parse_seed(args[1]);
    } else {
        throw std::invalid_argument("unknown graph generator '" + spec.name + "'");
    }
    return spec;
}

Graph generate(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphSpec::Kind::gnp: return gnp_graph(spec.n, spec.p, spec.seed);
        case GraphSpec::Kind::random_cubic: return random_cubic_graph(spec.n, spec.seed);
        case GraphSpec::Kind::random_subcubic:
            return random_subcubic_graph(spec.n, spec.p, spec.no333, spec.seed);
        case GraphSpec::Kind::named: break;
    }
    const auto& a = spec.args;
    auto arg = [&](std::size_t i) {
        if (i >= a.size()) throw std::invalid_argument("missing argument for '" + spec.name + "'");
        return a[i];
    };
    if (spec.name == "petersen") return petersen_graph();
    if (spec.name == "path") return path_graph(arg(0));
    if (spec.name == "cycle") return cycle_graph(arg(0));
    if (spec.name == "complete") return complete_graph(arg(0));
    if (spec.name == "empty") return Graph(arg(0));
    if (spec.name == "theta") return theta_graph(arg(0), arg(1), arg(2));
    throw std::invalid_argument("unknown graph generator '" + spec.name + "'");
}

}  // namespace iscount
