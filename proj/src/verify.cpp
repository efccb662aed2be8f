#include "graphseg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphseg/rng.hpp"

namespace graphseg {

LemmaReport check_disjointness(const DensityField& u, double eps) {
    if (eps < 0.0) throw Error("disjointness eps must be nonnegative");
    LemmaReport report;
    report.check = "disjointness";
    for (int x = 0; x < u.n; ++x) {
        double largest = 0.0, second = 0.0;
        int above = 0;
        for (int l = 0; l < u.m; ++l) {
            const double v = u.at(l, x);
            if (v > eps) ++above;
            if (v > largest) {
                second = largest;
                largest = v;
            } else if (v > second) {
                second = v;
            }
        }
        report.slack = std::max(report.slack, second);
        if (above >= 2)
            for (int l = 0; l < u.m; ++l)
                if (u.at(l, x) > eps) report.violations.push_back({x, l, u.at(l, x)});
    }
    report.pass = report.violations.empty();
    return report;
}

LemmaReport check_growth_inequality(const Graph& g, const VertexPartition& part,
                                    const SystemSpec& spec, const DensityField& u, double tol) {
    if (u.m != spec.m || u.n != g.vertex_count())
        throw Error("density field does not match the system");
    LemmaReport report;
    report.check = "growth_inequality";
    report.slack = -std::numeric_limits<double>::infinity();
    const int m = spec.m;
    std::vector<double> mbar(m);
    for (int x : part.interior) {
        for (int p = 0; p < m; ++p) mbar[p] = mean_component(g, u, p, x);
        for (int l = 0; l < m; ++l) {
            double others = 0.0;
            for (int p = 0; p < m; ++p)
                if (p != l) others += mbar[p];
            const double lhs = spec.eval_H(x, mbar[l] - others) - hat_value(u, l, x);
            const double rhs = spec.eval_f(l, x, u.at(l, x));
            const double gap = lhs - rhs;
            report.slack = std::max(report.slack, gap);
            if (gap > tol) report.violations.push_back({x, l, gap});
        }
    }
    if (part.interior.empty()) report.slack = 0.0;
    report.pass = report.violations.empty();
    return report;
}

ABDiagnostic compute_AB(const DensityField& u, const DensityField& v) {
    if (u.m != v.m || u.n != v.n) throw Error("density fields have mismatched dimensions");
    if (u.m < 1 || u.n < 1) throw Error("density fields must be nonempty");
    ABDiagnostic diag;
    diag.A = -std::numeric_limits<double>::infinity();
    diag.B = -std::numeric_limits<double>::infinity();
    for (int l = 0; l < u.m; ++l)
        for (int x = 0; x < u.n; ++x) {
            const double d = hat_value(u, l, x) - hat_value(v, l, x);
            if (d > diag.A) diag.A = d, diag.a_at = {l, x, d, false};
            if (-d > diag.B) diag.B = -d, diag.b_at = {l, x, -d, false};
        }
    diag.a_at.on_le_set = u.at(diag.a_at.density, diag.a_at.vertex) <=
                          v.at(diag.a_at.density, diag.a_at.vertex);
    diag.b_at.on_le_set = v.at(diag.b_at.density, diag.b_at.vertex) <=
                          u.at(diag.b_at.density, diag.b_at.vertex);
    return diag;
}

LemmaReport check_max_location(const DensityField& u, const DensityField& v, double tol) {
    if (u.m != v.m || u.n != v.n) throw Error("density fields have mismatched dimensions");
    LemmaReport report;
    report.check = "max_location";
    for (int l = 0; l < u.m; ++l) {
        double global = -std::numeric_limits<double>::infinity();
        double restricted = -std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int x = 0; x < u.n; ++x) {
            const double d = hat_value(u, l, x) - hat_value(v, l, x);
            if (d > global) {
                global = d;
                arg = x;
            }
            if (u.at(l, x) <= v.at(l, x) + tol) restricted = std::max(restricted, d);
        }
        // Attained on the restricted set means the two maxima coincide.
        if (restricted < global) {
            report.violations.push_back({arg, l, global - restricted});
            report.slack = std::max(report.slack, global - restricted);
        }
    }
    report.pass = report.violations.empty();
    return report;
}

LemmaReport check_inclusion_chain(const DensityField& u, const DensityField& v, double eps,
                                  double eps_prime) {
    if (u.m != v.m || u.n != v.n) throw Error("density fields have mismatched dimensions");
    LemmaReport report;
    report.check = "inclusion_chain";
    for (int l = 0; l < u.m; ++l)
        for (int x = 0; x < u.n; ++x) {
            const double du = u.at(l, x) - v.at(l, x);
            const double dhat = hat_value(u, l, x) - hat_value(v, l, x);
            if (du > eps && !(dhat > -eps_prime)) {
                report.violations.push_back({x, l, -eps_prime - dhat});
                report.slack = std::max(report.slack, -eps_prime - dhat);
            }
            if (dhat > eps_prime && !(du >= -eps)) {
                report.violations.push_back({x, l, -eps - du});
                report.slack = std::max(report.slack, -eps - du);
            }
        }
    report.pass = report.violations.empty();
    return report;
}

UniquenessResult uniqueness_harness(const Graph& g, const VertexPartition& part,
                                    const SystemSpec& spec, const SolverConfig& cfg,
                                    int n_starts, std::uint64_t seed, double init_max) {
    if (n_starts < 2) throw Error("uniqueness harness needs at least 2 starts");
    cfg.validate();

    const double cap = init_max >= 0.0 ? init_max : spec.phi.max_value();
    Rng rng(seed);

    UniquenessResult result;
    std::vector<DensityField> fields;

    auto run = [&](const std::string& name, const SolverConfig& run_cfg,
                   const DensityField* init) {
        SystemSolution sol = solve_system(g, part, spec, run_cfg, init);
        if (sol.report.converged)
            fields.push_back(std::move(sol.u));
        else
            result.all_converged = false;
        result.runs.push_back({name, std::move(sol.report)});
    };

    SolverConfig jacobi_cfg = cfg;
    jacobi_cfg.scheme = Scheme::jacobi;
    SolverConfig gs_cfg = cfg;
    gs_cfg.scheme = Scheme::gauss_seidel;
    run("zero/jacobi", jacobi_cfg, nullptr);
    run("zero/gauss_seidel", gs_cfg, nullptr);

    const char* scheme_name = cfg.scheme == Scheme::jacobi ? "jacobi" : "gauss_seidel";
    for (int k = 1; k < n_starts; ++k) {
        DensityField init(spec.m, g.vertex_count());
        for (int x : part.interior)
            for (int l = 0; l < spec.m; ++l) init.at(l, x) = rng.real01() * cap;
        run("random" + std::to_string(k) + "/" + scheme_name, cfg, &init);
    }

    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j)
            result.max_distance = std::max(result.max_distance,
                                           sup_distance(fields[i], fields[j]));
    return result;
}

} // namespace graphseg
