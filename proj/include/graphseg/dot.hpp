#pragma once

#include <iosfwd>

#include "graphseg/boundary.hpp"
#include "graphseg/fields.hpp"

namespace graphseg {

/// Graphviz export. Without a field: boundary vertices red and double-circled,
/// interior blue. With a field: every vertex is filled by the color of its
/// unique positive density (gray when all densities are at most 1e-8);
/// boundary vertices stay double-circled.
void export_dot(std::ostream& out, const Graph& g, const VertexPartition& part,
                const DensityField* u = nullptr);

} // namespace graphseg
