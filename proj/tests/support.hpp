// Test-only helpers and independent reference implementations (oracles).
// Everything here recomputes expected values from first principles and must
// stay independent of the library code paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphseg/boundary.hpp"
#include "graphseg/fields.hpp"
#include "graphseg/graph.hpp"
#include "graphseg/rng.hpp"
#include "graphseg/system_spec.hpp"

namespace testsupport {

// Dense Gaussian elimination with partial pivoting; A is row-major k x k.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const int k = static_cast<int>(b.size());
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * k + j]; };
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (std::abs(at(pivot, col)) < 1e-14) throw std::runtime_error("singular system");
        if (pivot != col) {
            for (int j = 0; j < k; ++j) std::swap(at(pivot, j), at(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < k; ++r) {
            const double factor = at(r, col) / at(col, col);
            if (factor == 0.0) continue;
            for (int j = col; j < k; ++j) at(r, j) -= factor * at(col, j);
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(k, 0.0);
    for (int r = k - 1; r >= 0; --r) {
        double sum = b[r];
        for (int j = r + 1; j < k; ++j) sum -= at(r, j) * x[j];
        x[r] = sum / at(r, r);
    }
    return x;
}

// Reference for the m=1, f=0, H=s system: direct dense solve of the interior
// averaging equations u(x) = mean of u over neighbors, with u = phi on the
// boundary.
inline graphseg::ScalarField harmonic_reference(const graphseg::Graph& g,
                                                const graphseg::VertexPartition& part,
                                                const graphseg::ScalarField& phi) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(part.interior.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i) pos[part.interior[i]] = i;

    std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
    std::vector<double> b(k, 0.0);
    for (int i = 0; i < k; ++i) {
        const int x = part.interior[i];
        a[static_cast<std::size_t>(i) * k + i] = 1.0;
        const double inv_deg = 1.0 / g.degree(x);
        for (int y : g.neighbors(x)) {
            if (pos[y] >= 0)
                a[static_cast<std::size_t>(i) * k + pos[y]] -= inv_deg;
            else
                b[i] += inv_deg * phi[y];
        }
    }
    std::vector<double> z = k > 0 ? solve_dense(std::move(a), std::move(b))
                                  : std::vector<double>{};
    graphseg::ScalarField u(n, 0.0);
    for (int x : part.boundary) u[x] = phi[x];
    for (int i = 0; i < k; ++i) u[part.interior[i]] = z[i];
    return u;
}

// Matrix-form projected Gauss-Seidel for the discrete obstacle problem
//   u >= 0,  -Lu + f >= 0,  u * (-Lu + f) = 0   on the interior,
//   u = bc on the boundary,
// written against the assembled Laplacian rather than the mean-value update.
inline graphseg::ScalarField obstacle_reference_pgs(const graphseg::Graph& g,
                                                    const graphseg::VertexPartition& part,
                                                    const graphseg::ScalarField& f,
                                                    const graphseg::ScalarField& bc,
                                                    double tol = 1e-13,
                                                    long max_iters = 2000000) {
    const int n = g.vertex_count();
    graphseg::ScalarField u(n, 0.0);
    for (int x : part.boundary) u[x] = bc[x];
    // Row x of (D - A) u = -f:  deg(x) u(x) - sum_nbr u(y) + f(x) >= 0.
    for (long it = 0; it < max_iters; ++it) {
        double change = 0.0;
        for (int x : part.interior) {
            double nbr_sum = 0.0;
            for (int y : g.neighbors(x)) nbr_sum += u[y];
            const double candidate = (nbr_sum - f[x]) / g.degree(x);
            const double next = candidate > 0.0 ? candidate : 0.0;
            change = std::max(change, std::abs(next - u[x]));
            u[x] = next;
        }
        if (change <= tol) break;
    }
    return u;
}

// Float re-derivation of the boundary criterion, independent of the exact
// integer comparison in the library.
inline std::vector<int> brute_force_boundary(const graphseg::Graph& g,
                                             const graphseg::DistanceTable& dt) {
    std::vector<int> boundary;
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
            double sum = 0.0;
            for (int z : g.neighbors(x)) sum += dt(z, y);
            if (g.degree(x) > 0 && sum / g.degree(x) < static_cast<double>(dt(x, y)))
                found = true;
        }
        if (found) boundary.push_back(x);
    }
    return boundary;
}

// Random connected graph with a substantial interior: a uniform random
// attachment tree plus a few chords. Erdos-Renyi samples are expander-like
// and tend to have all-boundary vertex sets, which would make solver checks
// vacuous.
inline graphseg::Graph random_tree_with_chords(int n, int chords, std::uint64_t seed) {
    graphseg::Rng rng(seed);
    std::vector<graphseg::Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i < n; ++i) {
        const int j = rng.index(i);
        edges.push_back({j, i, 1.0});
        seen.insert({j, i});
    }
    int added = 0;
    for (int guard = 0; added < chords && guard < 1000; ++guard) {
        const int a = rng.index(n), b = rng.index(n);
        if (a == b) continue;
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        edges.push_back({key.first, key.second, 1.0});
        ++added;
    }
    return graphseg::Graph::from_edges(n, edges);
}

class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("graphseg_test_" + std::to_string(std::rand()) + "_" +
                                     std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        auto p = path_ / name;
        std::ofstream out(p);
        out << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

} // namespace testsupport
