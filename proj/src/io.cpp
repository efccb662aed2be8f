#include "graphseg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphseg {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_cell(const std::string& cell, int line_no) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + cell.size() || cell.empty())
        throw Error("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    if (!std::isfinite(v))
        throw Error("line " + std::to_string(line_no) + ": value must be finite");
    return v;
}

bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace

void write_density_csv(std::ostream& out, const Graph& g, const DensityField& u) {
    out << "vertex";
    for (int l = 0; l < u.m; ++l) out << ",u" << (l + 1);
    out << '\n';
    for (int x = 0; x < g.vertex_count(); ++x) {
        out << g.label(x);
        for (int l = 0; l < u.m; ++l) out << ',' << format_double(u.at(l, x));
        out << '\n';
    }
}

DensityField read_density_csv(std::istream& in, const Graph& g) {
    std::string line;
    if (!next_line(in, line)) throw Error("field csv: missing header");
    auto header = split_csv(line);
    if (header.size() < 2 || header[0] != "vertex")
        throw Error("field csv: header must be 'vertex,u1,...,um'");
    const int m = static_cast<int>(header.size()) - 1;
    const int n = g.vertex_count();
    DensityField u(m, n);
    std::vector<char> seen(n, 0);
    int line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (static_cast<int>(cells.size()) != m + 1)
            throw Error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(m + 1) + " columns");
        const int x = g.index_of(cells[0]);
        if (x < 0)
            throw Error("line " + std::to_string(line_no) + ": unknown vertex '" + cells[0] +
                        "'");
        if (seen[x])
            throw Error("line " + std::to_string(line_no) + ": duplicate row for vertex '" +
                        cells[0] + "'");
        seen[x] = 1;
        for (int l = 0; l < m; ++l) {
            const double v = parse_cell(cells[l + 1], line_no);
            if (v < 0.0)
                throw Error("line " + std::to_string(line_no) +
                            ": density values must be nonnegative");
            u.at(l, x) = v;
        }
    }
    for (int x = 0; x < n; ++x)
        if (!seen[x]) throw Error("field csv: missing row for vertex '" + g.label(x) + "'");
    return u;
}

ScalarCsv read_scalar_csv(std::istream& in, const Graph& g, double default_value) {
    const int n = g.vertex_count();
    ScalarCsv out{ScalarField(n, default_value), std::vector<char>(n, 0)};
    std::string line;
    if (!next_line(in, line)) return out;  // empty file: all defaults
    auto header = split_csv(line);
    if (header.size() != 2 || header[0] != "vertex")
        throw Error("scalar csv: header must be 'vertex,<name>'");
    int line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != 2)
            throw Error("line " + std::to_string(line_no) + ": expected 2 columns");
        const int x = g.index_of(cells[0]);
        if (x < 0)
            throw Error("line " + std::to_string(line_no) + ": unknown vertex '" + cells[0] +
                        "'");
        if (out.listed[x])
            throw Error("line " + std::to_string(line_no) + ": duplicate row for vertex '" +
                        cells[0] + "'");
        out.listed[x] = 1;
        out.field[x] = parse_cell(cells[1], line_no);
    }
    return out;
}

void write_scalar_csv(std::ostream& out, const Graph& g, const ScalarField& f) {
    out << "vertex,u1\n";
    for (int x = 0; x < g.vertex_count(); ++x)
        out << g.label(x) << ',' << format_double(f[x]) << '\n';
}

} // namespace graphseg
