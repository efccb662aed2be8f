#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphseg/fields.hpp"
#include "graphseg/graph.hpp"

namespace graphseg {

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

/// Header "vertex,u1,...,um", one row per vertex in index order.
void write_density_csv(std::ostream& out, const Graph& g, const DensityField& u);

/// Reads a field CSV; every vertex must appear exactly once and all values
/// must be finite and nonnegative.
DensityField read_density_csv(std::istream& in, const Graph& g);

struct ScalarCsv {
    ScalarField field;
    std::vector<char> listed;  // which vertices had a row
};

/// Two-column CSV "vertex,<anything>"; unlisted vertices get default_value.
ScalarCsv read_scalar_csv(std::istream& in, const Graph& g, double default_value = 0.0);

void write_scalar_csv(std::ostream& out, const Graph& g, const ScalarField& f);

} // namespace graphseg
