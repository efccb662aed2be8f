#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphseg/fields.hpp"
#include "graphseg/system_spec.hpp"

namespace graphseg {

enum class Scheme { jacobi, gauss_seidel };

struct SolverConfig {
    Scheme scheme = Scheme::jacobi;
    double tol = 1e-10;        // sup-norm stopping tolerance on the update
    long max_iters = 100000;
    double omega = 1.0;        // damping, in (0, 1]
    double scalar_tol = 1e-14; // bisection tolerance for the implicit scalar solve

    void validate() const;
};

struct SolveReport {
    long iterations = 0;
    bool converged = false;
    double final_change = 0.0;
    double final_residual = 0.0;
    std::vector<double> change_history;
};

/// Unique root s* in [0, max(c, 0)] of s = max(c - f(s), 0) for f
/// nondecreasing with f(0) = 0. Bisection on g(s) = max(c - f(s), 0) - s,
/// which is strictly decreasing with g(0) >= 0; at most 50 halvings.
template <class F>
double solve_scalar_implicit(double c, F&& f, double tol) {
    if (!(tol > 0.0)) throw Error("solve_scalar_implicit: tolerance must be positive");
    if (c <= 0.0) return 0.0;
    // f(c) == 0 with f nondecreasing and f(0) = 0 forces f == 0 on [0, c].
    if (f(c) == 0.0) return c;
    double lo = 0.0, hi = c;
    for (int i = 0; i < 50 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = std::max(c - f(mid), 0.0) - mid;
        if (g > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct SweepResult {
    DensityField field;
    double change = 0.0;
};

/// One relaxation sweep over the interior in ascending vertex order:
/// u^l(x) <- (1-omega) u^l(x) + omega * s*, where s* solves
/// s = max(H(x, ubar^l - sum_{p!=l} ubar^p) - f_l(x, s), 0).
/// Jacobi reads all means from the incoming field, Gauss-Seidel in place.
/// Boundary rows are copied unchanged.
SweepResult sweep_once(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                       const DensityField& u, const SolverConfig& cfg);

/// phi on the boundary, zero on the interior.
DensityField zero_extension(const SystemSpec& spec, const VertexPartition& part, int n);

struct SystemSolution {
    DensityField u;
    SolveReport report;
};

/// Fixed-point iteration of sweep_once until the sup-norm update drops to
/// cfg.tol or max_iters is hit. converged additionally requires the
/// a-posteriori residual to be at most 100 * tol. A custom initial field, if
/// given, must be nonnegative on the interior; its boundary rows are replaced
/// by phi. Requires a connected graph with nonempty boundary.
SystemSolution solve_system(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                            const SolverConfig& cfg, const DensityField* init = nullptr);

/// Max defect over all rows: |u^l(x) - max(H(x, ubar^l - sum ubar^p) -
/// f_l(x, u^l(x)), 0)| on the interior, |u^l(x) - phi^l(x)| on the boundary.
double system_residual(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                       const DensityField& u);

struct ObstacleSolution {
    ScalarField u;
    SolveReport report;
};

/// One-phase obstacle problem min(-Lu + f, u) = 0 on the interior with u = bc
/// on the boundary, iterated as u(x) <- max(ubar(x) - f(x)/deg(x), 0).
/// Requires f >= 0 on V; interior entries of bc are ignored.
ObstacleSolution solve_obstacle(const Graph& g, const VertexPartition& part,
                                const ScalarField& f, const ScalarField& bc,
                                const SolverConfig& cfg);

/// Complementarity defect max over interior x of |min(-Lu(x) + f(x), u(x))|.
double obstacle_residual(const Graph& g, const VertexPartition& part, const ScalarField& f,
                         const ScalarField& u);

} // namespace graphseg
