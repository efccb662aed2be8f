#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphseg/error.hpp"

namespace graphseg {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Undirected simple graph with optional positive edge weights and string
/// vertex labels. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an explicit edge list. Labels default to v1..vn.
    /// Rejects self-loops, duplicate edges, out-of-range endpoints and
    /// non-positive weights.
    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::vector<std::string> labels = {}, bool weighted = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int x) const { return static_cast<int>(adj_[x].size()); }
    double weighted_degree(int x) const;
    bool weighted() const { return weighted_; }

    const std::vector<int>& neighbors(int x) const { return adj_[x]; }
    const std::vector<double>& neighbor_weights(int x) const { return w_[x]; }

    const std::string& label(int x) const { return labels_[x]; }
    /// Index of a label, or -1 if unknown.
    int index_of(std::string_view label) const;

    /// Unique edges with u < v, in ascending (u, v) order.
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<double>> w_;
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
    bool weighted_ = false;
};

/// Parses the edge-list text format: one edge per line, "u v" or "u v w",
/// lines starting with '#' are comments. Labels are arbitrary tokens (commas
/// and quotes excluded), mapped to dense indices in first-appearance order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Writes the canonical edge-list form: smaller label first within an edge,
/// lines sorted lexicographically, weights emitted only for weighted graphs.
void serialize_edge_list(std::ostream& out, const Graph& g);

enum class GraphKind { path, cycle, star, complete, grid2d, random_connected };

struct GenParams {
    int n = 0;         // path/cycle/complete: vertex count; star: leaf count; random: vertex count
    int rows = 0;      // grid2d
    int cols = 0;      // grid2d
    double p = 0.0;    // random_connected edge probability, in (0, 1]
    std::uint64_t seed = 0;
};

Graph generate(GraphKind kind, const GenParams& params);

Graph generate_path(int n);
Graph generate_cycle(int n);
/// Star with `leaves` leaf vertices plus one center (the center is v1).
Graph generate_star(int leaves);
Graph generate_complete(int n);
Graph generate_grid2d(int rows, int cols);
/// Erdos-Renyi G(n, p), resampled until connected. Deterministic given seed.
Graph generate_random_connected(int n, double p, std::uint64_t seed);

bool is_connected(const Graph& g);

/// All-pairs hop distances. d(x, y) == unreachable when no path exists.
class DistanceTable {
public:
    static constexpr int unreachable = -1;

    DistanceTable() = default;
    explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, unreachable) {}

    int size() const { return n_; }
    int operator()(int x, int y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }
    int& at(int x, int y) { return d_[static_cast<std::size_t>(x) * n_ + y]; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// BFS from every vertex; hop (unweighted) distance regardless of weights.
DistanceTable all_pairs_hop_distances(const Graph& g);

} // namespace graphseg
