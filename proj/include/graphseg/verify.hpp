#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphseg/solver.hpp"

namespace graphseg {

struct LemmaViolation {
    int vertex = -1;
    int density = -1;
    double value = 0.0;
};

struct LemmaReport {
    std::string check;
    bool pass = true;
    double slack = 0.0;
    std::vector<LemmaViolation> violations;
};

/// Segregation check: at most one density above eps at every vertex.
/// slack is the largest second-largest density value over all vertices.
LemmaReport check_disjointness(const DensityField& u, double eps);

/// Growth inequality H(x, ubar^l - sum_{p!=l} ubar^p) - hat(u)^l(x) <=
/// f_l(x, u^l(x)) at every interior vertex and density; slack is the largest
/// left-minus-right value. (On the boundary the inequality carries no
/// information: the Dirichlet rows do not constrain neighbor means, and
/// generic data violates it there.)
LemmaReport check_growth_inequality(const Graph& g, const VertexPartition& part,
                                    const SystemSpec& spec, const DensityField& u, double tol);

struct ArgmaxInfo {
    int density = 0;
    int vertex = 0;
    double value = 0.0;
    bool on_le_set = false;  // A: u^l(x) <= v^l(x); B: v^l(x) <= u^l(x)
};

struct ABDiagnostic {
    double A = 0.0;
    double B = 0.0;
    ArgmaxInfo a_at;
    ArgmaxInfo b_at;
};

/// A = max_l max_x (hat(u)^l - hat(v)^l), B the mirror; exhaustive scan with
/// smallest (density, vertex) winning ties.
ABDiagnostic compute_AB(const DensityField& u, const DensityField& v);

/// Max-location check: for every l, the max over V of hat(u)^l - hat(v)^l is
/// attained at some vertex with u^l(x) <= v^l(x) + tol.
LemmaReport check_max_location(const DensityField& u, const DensityField& v, double tol);

/// Inclusion chain {u^l > v^l + eps} subset of {hat u^l > hat v^l - eps'}
/// subset of {u^l >= v^l - eps}, checked exhaustively.
LemmaReport check_inclusion_chain(const DensityField& u, const DensityField& v, double eps,
                                  double eps_prime);

struct StartRun {
    std::string name;
    SolveReport report;
};

struct UniquenessResult {
    double max_distance = 0.0;  // over all pairs of converged runs
    bool all_converged = true;
    std::vector<StartRun> runs;
};

/// Empirical uniqueness probe: solves from the zero extension with both
/// schemes, then from n_starts - 1 random nonnegative interior starts with
/// cfg.scheme (values uniform in [0, init_max], where init_max < 0 means the
/// largest boundary value). Deterministic given seed. Requires n_starts >= 2.
UniquenessResult uniqueness_harness(const Graph& g, const VertexPartition& part,
                                    const SystemSpec& spec, const SolverConfig& cfg,
                                    int n_starts, std::uint64_t seed, double init_max = -1.0);

} // namespace graphseg
