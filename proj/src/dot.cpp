#include "graphseg/dot.hpp"

#include <ostream>

namespace graphseg {

namespace {

constexpr double kPositiveEps = 1e-8;

const char* const kDensityColors[] = {"crimson",      "royalblue", "forestgreen",
                                      "darkorange",   "mediumpurple", "goldenrod",
                                      "teal",         "salmon"};
constexpr int kPaletteSize = 8;

std::string quote(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '\\') out += "\\\\";
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void export_dot(std::ostream& out, const Graph& g, const VertexPartition& part,
                const DensityField* u) {
    out << "graph G {\n";
    out << "  node [style=filled];\n";
    for (int x = 0; x < g.vertex_count(); ++x) {
        const bool bdry = part.is_boundary(x);
        const char* shape = bdry ? "doublecircle" : "circle";
        const char* color;
        if (u) {
            int positive = -1;
            for (int l = 0; l < u->m; ++l)
                if (u->at(l, x) > kPositiveEps) {
                    positive = l;
                    break;
                }
            color = positive < 0 ? "gray" : kDensityColors[positive % kPaletteSize];
        } else {
            color = bdry ? "red" : "blue";
        }
        out << "  " << quote(g.label(x)) << " [shape=" << shape << ", fillcolor=" << color
            << "];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << quote(g.label(e.u)) << " -- " << quote(g.label(e.v)) << ";\n";
    out << "}\n";
}

} // namespace graphseg
