#include "graphseg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "graphseg/io.hpp"
#include "graphseg/rng.hpp"

namespace graphseg {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    return labels;
}

void check_label(const std::string& label) {
    if (label.empty()) throw Error("vertex labels must be non-empty");
    if (label.find(',') != std::string::npos || label.find('"') != std::string::npos)
        throw Error("vertex label '" + label + "' must not contain ',' or '\"'");
}

} // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels,
                        bool weighted) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.weighted_ = weighted;
    g.adj_.resize(n);
    g.w_.resize(n);
    g.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
    if (static_cast<int>(g.labels_.size()) != n)
        throw Error("label count does not match vertex count");
    for (int i = 0; i < n; ++i) {
        check_label(g.labels_[i]);
        if (!g.index_.emplace(g.labels_[i], i).second)
            throw Error("duplicate vertex label '" + g.labels_[i] + "'");
    }

    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range");
        if (e.u == e.v)
            throw Error("self-loop at vertex '" + g.labels_[e.u] + "' is not allowed");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw Error("edge weight must be a positive finite number");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw Error("duplicate edge between '" + g.labels_[e.u] + "' and '" +
                        g.labels_[e.v] + "'");
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
        g.w_[e.u].push_back(e.w);
        g.w_[e.v].push_back(e.w);
    }
    g.edge_count_ = static_cast<int>(seen.size());

    for (int x = 0; x < n; ++x) {
        std::vector<int> order(g.adj_[x].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.adj_[x][a] < g.adj_[x][b]; });
        std::vector<int> adj(order.size());
        std::vector<double> w(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            adj[i] = g.adj_[x][order[i]];
            w[i] = g.w_[x][order[i]];
        }
        g.adj_[x] = std::move(adj);
        g.w_[x] = std::move(w);
    }
    return g;
}

double Graph::weighted_degree(int x) const {
    double sum = 0.0;
    for (double w : w_[x]) sum += w;
    return sum;
}

int Graph::index_of(std::string_view label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int x = 0; x < n_; ++x)
        for (std::size_t i = 0; i < adj_[x].size(); ++i)
            if (x < adj_[x][i]) out.push_back({x, adj_[x][i], w_[x][i]});
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::map<std::string, int, std::less<>> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    bool weighted = false;

    auto intern = [&](const std::string& token) {
        auto it = index.find(token);
        if (it != index.end()) return it->second;
        check_label(token);
        int id = static_cast<int>(labels.size());
        index.emplace(token, id);
        labels.push_back(token);
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() < 2 || tokens.size() > 3)
            throw Error("line " + std::to_string(line_no) +
                        ": expected 'u v' or 'u v w', got '" + line + "'");
        if (tokens[0] == tokens[1])
            throw Error("line " + std::to_string(line_no) + ": self-loop '" + line +
                        "' is not allowed");
        int u = intern(tokens[0]);
        int v = intern(tokens[1]);
        double w = 1.0;
        if (tokens.size() == 3) {
            const char* begin = tokens[2].c_str();
            char* end = nullptr;
            w = std::strtod(begin, &end);
            if (end != begin + tokens[2].size())
                throw Error("line " + std::to_string(line_no) + ": bad weight '" + tokens[2] +
                            "'");
            if (!(w > 0.0) || !std::isfinite(w))
                throw Error("line " + std::to_string(line_no) +
                            ": weight must be a positive finite number");
            weighted = true;
        }
        if (!seen.insert(std::minmax(u, v)).second)
            throw Error("line " + std::to_string(line_no) + ": duplicate edge '" + line + "'");
        edges.push_back({u, v, w});
    }
    if (edges.empty()) throw Error("edge list is empty");
    const int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, edges, std::move(labels), weighted);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void serialize_edge_list(std::ostream& out, const Graph& g) {
    struct Line {
        std::string a, b;
        double w;
    };
    std::vector<Line> lines;
    lines.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        std::string a = g.label(e.u), b = g.label(e.v);
        if (b < a) std::swap(a, b);
        lines.push_back({std::move(a), std::move(b), e.w});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    for (const Line& l : lines) {
        out << l.a << ' ' << l.b;
        if (g.weighted()) out << ' ' << format_double(l.w);
        out << '\n';
    }
}

Graph generate_path(int n) {
    if (n < 1) throw Error("path size must be at least 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph::from_edges(n, edges);
}

Graph generate_cycle(int n) {
    if (n < 3) throw Error("cycle size must be at least 3 for a simple graph");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    edges.push_back({n - 1, 0, 1.0});
    return Graph::from_edges(n, edges);
}

Graph generate_star(int leaves) {
    if (leaves < 1) throw Error("star must have at least 1 leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph::from_edges(leaves + 1, edges);
}

Graph generate_complete(int n) {
    if (n < 1) throw Error("complete graph size must be at least 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, edges);
}

Graph generate_grid2d(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("grid dimensions must be at least 1");
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    return Graph::from_edges(rows * cols, edges);
}

Graph generate_random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("random graph size must be at least 1");
    if (!(p > 0.0) || p > 1.0) throw Error("edge probability must be in (0, 1]");
    Rng rng(seed);
    constexpr int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.real01() < p) edges.push_back({i, j, 1.0});
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw Error("failed to sample a connected graph; increase p");
}

Graph generate(GraphKind kind, const GenParams& params) {
    switch (kind) {
        case GraphKind::path: return generate_path(params.n);
        case GraphKind::cycle: return generate_cycle(params.n);
        case GraphKind::star: return generate_star(params.n);
        case GraphKind::complete: return generate_complete(params.n);
        case GraphKind::grid2d: return generate_grid2d(params.rows, params.cols);
        case GraphKind::random_connected:
            return generate_random_connected(params.n, params.p, params.seed);
    }
    throw Error("unknown graph kind");
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (int y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                queue.push(y);
            }
    }
    return reached == n;
}

DistanceTable all_pairs_hop_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceTable dt(n);
    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int head = 0, tail = 0;
        queue[tail++] = src;
        dt.at(src, src) = 0;
        while (head < tail) {
            int x = queue[head++];
            int dx = dt(src, x);
            for (int y : g.neighbors(x))
                if (dt(src, y) == DistanceTable::unreachable) {
                    dt.at(src, y) = dx + 1;
                    queue[tail++] = y;
                }
        }
    }
    return dt;
}

} // namespace graphseg
