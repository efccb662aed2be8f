#include "graphseg/solver.hpp"

#include <cmath>
#include <limits>

namespace graphseg {

void SolverConfig::validate() const {
    if (!(tol > 0.0)) throw Error("solver tolerance must be positive");
    if (max_iters < 1) throw Error("max_iters must be at least 1");
    if (!(omega > 0.0) || omega > 1.0) throw Error("damping omega must be in (0, 1]");
    if (!(scalar_tol > 0.0)) throw Error("scalar tolerance must be positive");
}

namespace {

void check_dimensions(const Graph& g, const VertexPartition& part, int n_field,
                      const char* what) {
    if (n_field != g.vertex_count()) throw Error(std::string(what) + " does not match the graph");
    if (static_cast<int>(part.in_boundary.size()) != g.vertex_count())
        throw Error("vertex partition does not match the graph");
}

// ubar^l - sum_{p != l} ubar^p, summed the same way as hat_value.
double hat_of_means(const std::vector<double>& mbar, int l) {
    double others = 0.0;
    for (int p = 0; p < static_cast<int>(mbar.size()); ++p)
        if (p != l) others += mbar[p];
    return mbar[l] - others;
}

} // namespace

SweepResult sweep_once(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                       const DensityField& u, const SolverConfig& cfg) {
    cfg.validate();
    check_dimensions(g, part, u.n, "density field");
    if (u.m != spec.m) throw Error("density field does not match the system");

    SweepResult result{u, 0.0};
    DensityField& out = result.field;
    // Jacobi reads every mean from the incoming field; Gauss-Seidel reads the
    // field being written, in ascending vertex order.
    const DensityField& read = cfg.scheme == Scheme::jacobi ? u : out;

    const int m = spec.m;
    std::vector<double> mbar(m);
    for (int x : part.interior) {
        if (g.degree(x) == 0)
            throw Error("interior vertex '" + g.label(x) + "' has no neighbors");
        for (int p = 0; p < m; ++p) mbar[p] = mean_component(g, read, p, x);
        for (int l = 0; l < m; ++l) {
            const double c = spec.eval_H(x, hat_of_means(mbar, l));
            const double target = solve_scalar_implicit(
                c, [&](double s) { return spec.eval_f(l, x, s); }, cfg.scalar_tol);
            const double old = out.at(l, x);
            const double next = (1.0 - cfg.omega) * old + cfg.omega * target;
            out.at(l, x) = next;
            result.change = std::max(result.change, std::abs(next - old));
        }
    }
    return result;
}

DensityField zero_extension(const SystemSpec& spec, const VertexPartition& part, int n) {
    DensityField u(spec.m, n);
    for (int b : part.boundary)
        for (int l = 0; l < spec.m; ++l) u.at(l, b) = spec.phi.at(l, b);
    return u;
}

SystemSolution solve_system(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                            const SolverConfig& cfg, const DensityField* init) {
    cfg.validate();
    if (!is_connected(g)) throw Error("solve_system requires a connected graph");
    if (part.boundary.empty())
        throw Error("graph boundary is empty; the Dirichlet data has nowhere to act");

    DensityField u;
    if (init) {
        if (init->m != spec.m || init->n != g.vertex_count())
            throw Error("initial field dimensions do not match the problem");
        u = *init;
        for (int x : part.interior)
            for (int l = 0; l < spec.m; ++l) {
                const double v = u.at(l, x);
                if (!std::isfinite(v) || v < 0.0)
                    throw Error("initial field must be finite and nonnegative on the interior");
            }
        // Boundary rows always carry phi exactly.
        for (int b : part.boundary)
            for (int l = 0; l < spec.m; ++l) u.at(l, b) = spec.phi.at(l, b);
    } else {
        u = zero_extension(spec, part, g.vertex_count());
    }

    SolveReport report;
    double change = std::numeric_limits<double>::infinity();
    for (long it = 0; it < cfg.max_iters; ++it) {
        SweepResult sweep = sweep_once(g, part, spec, u, cfg);
        u = std::move(sweep.field);
        change = sweep.change;
        report.change_history.push_back(change);
        report.iterations = it + 1;
        if (change <= cfg.tol) break;
    }
    report.final_change = change;
    report.final_residual = system_residual(g, part, spec, u);
    report.converged = change <= cfg.tol && report.final_residual <= 100.0 * cfg.tol;
    return {std::move(u), std::move(report)};
}

double system_residual(const Graph& g, const VertexPartition& part, const SystemSpec& spec,
                       const DensityField& u) {
    check_dimensions(g, part, u.n, "density field");
    if (u.m != spec.m) throw Error("density field does not match the system");
    const int m = spec.m;
    double r = 0.0;
    std::vector<double> mbar(m);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (part.is_boundary(x)) {
            for (int l = 0; l < m; ++l)
                r = std::max(r, std::abs(u.at(l, x) - spec.phi.at(l, x)));
            continue;
        }
        for (int p = 0; p < m; ++p) mbar[p] = mean_component(g, u, p, x);
        for (int l = 0; l < m; ++l) {
            const double c = spec.eval_H(x, hat_of_means(mbar, l));
            const double row = std::max(c - spec.eval_f(l, x, u.at(l, x)), 0.0);
            r = std::max(r, std::abs(u.at(l, x) - row));
        }
    }
    return r;
}

ObstacleSolution solve_obstacle(const Graph& g, const VertexPartition& part,
                                const ScalarField& f, const ScalarField& bc,
                                const SolverConfig& cfg) {
    cfg.validate();
    if (!is_connected(g)) throw Error("solve_obstacle requires a connected graph");
    if (part.boundary.empty())
        throw Error("graph boundary is empty; the Dirichlet data has nowhere to act");
    check_dimensions(g, part, f.size(), "load field");
    if (bc.size() != g.vertex_count()) throw Error("boundary field does not match the graph");
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (!std::isfinite(f[x]) || f[x] < 0.0)
            throw Error("obstacle load must be nonnegative and finite (vertex '" + g.label(x) +
                        "')");
        if (!std::isfinite(bc[x])) throw Error("boundary values must be finite");
    }

    ScalarField u(g.vertex_count(), 0.0);
    for (int b : part.boundary) u[b] = bc[b];

    SolveReport report;
    double change = std::numeric_limits<double>::infinity();
    ScalarField next = u;
    for (long it = 0; it < cfg.max_iters; ++it) {
        change = 0.0;
        const ScalarField& read = cfg.scheme == Scheme::jacobi ? u : next;
        for (int x : part.interior) {
            const double target =
                std::max(mean_value(g, read, x) - f[x] / g.degree(x), 0.0);
            const double old = next[x];
            const double value = (1.0 - cfg.omega) * old + cfg.omega * target;
            next[x] = value;
            change = std::max(change, std::abs(value - old));
        }
        u = next;
        report.change_history.push_back(change);
        report.iterations = it + 1;
        if (change <= cfg.tol) break;
    }
    report.final_change = change;
    report.final_residual = obstacle_residual(g, part, f, u);
    report.converged = change <= cfg.tol && report.final_residual <= 100.0 * cfg.tol;
    return {std::move(u), std::move(report)};
}

double obstacle_residual(const Graph& g, const VertexPartition& part, const ScalarField& f,
                         const ScalarField& u) {
    check_dimensions(g, part, u.size(), "scalar field");
    double r = 0.0;
    for (int x : part.interior)
        r = std::max(r, std::abs(std::min(-laplacian_apply(g, u, x) + f[x], u[x])));
    return r;
}

} // namespace graphseg
