#pragma once

#include <vector>

#include "graphseg/graph.hpp"

namespace graphseg {

/// One real value per vertex.
struct ScalarField {
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(int n, double fill = 0.0) : values(static_cast<std::size_t>(n), fill) {}

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int x) const { return values[x]; }
    double& operator[](int x) { return values[x]; }
};

/// m nonnegative values per vertex, density-major storage.
struct DensityField {
    int m = 0;
    int n = 0;
    std::vector<double> values;

    DensityField() = default;
    DensityField(int m_, int n_)
        : m(m_), n(n_), values(static_cast<std::size_t>(m_) * n_, 0.0) {}

    double at(int l, int x) const { return values[static_cast<std::size_t>(l) * n + x]; }
    double& at(int l, int x) { return values[static_cast<std::size_t>(l) * n + x]; }

    ScalarField component(int l) const;
};

/// Average of f over the neighbors of x. Rejects isolated vertices.
double mean_value(const Graph& g, const ScalarField& f, int x);
double mean_component(const Graph& g, const DensityField& u, int l, int x);

/// hat(u^l) = u^l - sum_{p != l} u^p, pointwise.
ScalarField hat_field(const DensityField& u, int l);
double hat_value(const DensityField& u, int l, int x);

/// Unnormalized graph Laplacian: sum over neighbors y of (f(y) - f(x)).
double laplacian_apply(const Graph& g, const ScalarField& f, int x);

/// (1/2) sum_ij w_ij (f_i - f_j)^2 = sum over edges of w (f_u - f_v)^2.
double dirichlet_energy(const Graph& g, const ScalarField& f);

struct EigenPair {
    double value = 0.0;
    ScalarField vector;  // unit 2-norm, zero off the subset
};

/// Smallest eigenvalue of the weighted Laplacian restricted to rows/columns
/// in `subset` (full weighted degrees on the diagonal), with its minimizer
/// extended by zero. Dense cyclic Jacobi iteration; intended for |S| <= 500.
EigenPair first_eigenvalue(const Graph& g, const std::vector<int>& subset);

double sup_distance(const DensityField& a, const DensityField& b);

} // namespace graphseg
