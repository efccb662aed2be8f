#include "graphseg/boundary.hpp"

namespace graphseg {

std::optional<Witness> boundary_witness(const Graph& g, const DistanceTable& dt, int x) {
    const int n = g.vertex_count();
    const long long deg = g.degree(x);
    Witness best;
    for (int y = 0; y < n; ++y) {
        long long neighbor_sum = 0;
        for (int z : g.neighbors(x)) neighbor_sum += dt(z, y);
        // margin > 0 iff the neighbor-average distance to y beats d(x, y);
        // cross-multiplied by deg(x) to stay in integers.
        const long long margin = deg * dt(x, y) - neighbor_sum;
        if (margin > best.margin) best = {y, margin};
    }
    if (best.margin > 0) return best;
    return std::nullopt;
}

VertexPartition detect_boundary(const Graph& g, const DistanceTable& dt) {
    if (!is_connected(g)) throw Error("boundary detection requires a connected graph");
    const int n = g.vertex_count();
    if (dt.size() != n) throw Error("distance table does not match the graph");
    VertexPartition part;
    part.witnesses.resize(n);
    part.in_boundary.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        part.witnesses[x] = boundary_witness(g, dt, x);
        if (part.witnesses[x]) {
            part.in_boundary[x] = 1;
            part.boundary.push_back(x);
        } else {
            part.interior.push_back(x);
        }
    }
    return part;
}

} // namespace graphseg
