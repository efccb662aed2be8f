#pragma once

#include <optional>
#include <vector>

#include "graphseg/graph.hpp"

namespace graphseg {

/// A vertex y certifying that x is a boundary vertex, together with the
/// integer margin deg(x)*d(x,y) - sum_{(x,z) in E} d(z,y) > 0.
struct Witness {
    int vertex = -1;
    long long margin = 0;
};

struct VertexPartition {
    std::vector<int> boundary;  // ascending
    std::vector<int> interior;  // ascending
    std::vector<std::optional<Witness>> witnesses;  // one slot per vertex
    std::vector<char> in_boundary;                  // one flag per vertex

    bool is_boundary(int x) const { return in_boundary[x] != 0; }
};

/// Best witness for x: the y maximizing deg(x)*d(x,y) - sum_{z~x} d(z,y),
/// ties broken by smallest y. Empty when the maximum margin is not positive,
/// i.e. x is interior. Exact integer arithmetic throughout.
std::optional<Witness> boundary_witness(const Graph& g, const DistanceTable& dt, int x);

/// Splits V into boundary and interior: x is boundary iff some y makes the
/// neighbor-average distance to y strictly smaller than d(x,y).
/// Requires a connected graph.
VertexPartition detect_boundary(const Graph& g, const DistanceTable& dt);

} // namespace graphseg
