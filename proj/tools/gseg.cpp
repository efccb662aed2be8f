// gseg: solve, inspect and certify implicit segregation systems on connected
// graphs from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphseg/boundary.hpp"
#include "graphseg/dot.hpp"
#include "graphseg/graph.hpp"
#include "graphseg/io.hpp"
#include "graphseg/solver.hpp"
#include "graphseg/system_spec.hpp"
#include "graphseg/verify.hpp"

namespace {

using namespace graphseg;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotCertified = 2;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    return parse_edge_list(in);
}

struct Analyzed {
    Graph g;
    DistanceTable dt;
    VertexPartition part;
};

Analyzed analyze(const std::string& path) {
    Analyzed a;
    a.g = load_graph(path);
    if (!is_connected(a.g)) throw Error("graph '" + path + "' is not connected");
    a.dt = all_pairs_hop_distances(a.g);
    a.part = detect_boundary(a.g, a.dt);
    return a;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write to '" + path + "'");
    return out;
}

void write_dot_file(const std::string& path, const Graph& g, const VertexPartition& part,
                    const DensityField* u) {
    auto out = open_output(path);
    export_dot(out, g, part, u);
}

struct SolverFlags {
    std::string scheme = "jacobi";
    double tol = 1e-10;
    long max_iters = 100000;
    double omega = 1.0;
    double scalar_tol = 1e-14;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--scheme", scheme, "Sweep scheme: jacobi or gs")
            ->check(CLI::IsMember({"jacobi", "gs"}));
        cmd->add_option("--tol", tol, "Sup-norm stopping tolerance");
        cmd->add_option("--max-iters", max_iters, "Iteration cap");
        cmd->add_option("--omega", omega, "Damping factor in (0, 1]");
        cmd->add_option("--scalar-tol", scalar_tol, "Bisection tolerance");
        cmd->add_option("--seed", seed,
                        "Seed for randomized runs; the default deterministic init ignores it");
    }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.scheme = scheme == "gs" ? Scheme::gauss_seidel : Scheme::jacobi;
        cfg.tol = tol;
        cfg.max_iters = max_iters;
        cfg.omega = omega;
        cfg.scalar_tol = scalar_tol;
        cfg.validate();
        return cfg;
    }
};

void print_report_line(std::ostream& out, const SolveReport& r) {
    out << "converged=" << (r.converged ? "true" : "false") << " iterations=" << r.iterations
        << " final_change=" << format_double(r.final_change)
        << " residual=" << format_double(r.final_residual) << '\n';
}

int run_generate(const std::string& kind, int n, int rows, int cols, double p,
                 std::uint64_t seed, const std::string& out_path) {
    GenParams params;
    params.n = n;
    params.rows = rows;
    params.cols = cols;
    params.p = p;
    params.seed = seed;
    GraphKind k;
    if (kind == "path") k = GraphKind::path;
    else if (kind == "cycle") k = GraphKind::cycle;
    else if (kind == "star") k = GraphKind::star;
    else if (kind == "complete") k = GraphKind::complete;
    else if (kind == "grid2d") k = GraphKind::grid2d;
    else if (kind == "random_connected") k = GraphKind::random_connected;
    else throw Error("unknown graph kind '" + kind + "'");
    Graph g = generate(k, params);
    if (out_path == "-") {
        serialize_edge_list(std::cout, g);
    } else {
        auto out = open_output(out_path);
        serialize_edge_list(out, g);
    }
    return kExitOk;
}

int run_boundary(const std::string& graph_path, const std::string& dot_path) {
    Analyzed a = analyze(graph_path);
    for (int x = 0; x < a.g.vertex_count(); ++x) {
        if (a.part.is_boundary(x)) {
            const Witness& w = *a.part.witnesses[x];
            std::cout << a.g.label(x) << " BOUNDARY witness=" << a.g.label(w.vertex)
                      << " margin=" << w.margin << '\n';
        } else {
            std::cout << a.g.label(x) << " INTERIOR\n";
        }
    }
    if (!dot_path.empty()) write_dot_file(dot_path, a.g, a.part, nullptr);
    return kExitOk;
}

int run_solve(const std::string& graph_path, const std::string& problem_path,
              const std::string& out_path, const std::string& dot_path,
              const SolverFlags& flags) {
    Analyzed a = analyze(graph_path);
    if (a.part.boundary.empty())
        throw Error("graph has an empty boundary; the system has no Dirichlet rows");
    SystemSpec spec = load_problem(problem_path, a.g, a.part);
    SystemSolution sol = solve_system(a.g, a.part, spec, flags.config());
    {
        auto out = open_output(out_path);
        write_density_csv(out, a.g, sol.u);
    }
    if (!dot_path.empty()) write_dot_file(dot_path, a.g, a.part, &sol.u);
    print_report_line(std::cout, sol.report);
    if (!sol.report.converged) {
        std::cerr << "error: solver did not converge within " << flags.max_iters
                  << " iterations\n";
        return kExitNotCertified;
    }
    return kExitOk;
}

int run_obstacle(const std::string& graph_path, const std::string& f_path,
                 const std::string& bc_path, const std::string& out_path,
                 const std::string& dot_path, const SolverFlags& flags) {
    Analyzed a = analyze(graph_path);
    if (a.part.boundary.empty())
        throw Error("graph has an empty boundary; the problem has no Dirichlet rows");

    ScalarField f(a.g.vertex_count(), 0.0);
    if (!f_path.empty()) {
        std::ifstream in(f_path);
        if (!in) throw Error("cannot open load file '" + f_path + "'");
        f = read_scalar_csv(in, a.g, 0.0).field;
    }
    ScalarField bc(a.g.vertex_count(), 0.0);
    if (!bc_path.empty()) {
        std::ifstream in(bc_path);
        if (!in) throw Error("cannot open boundary-value file '" + bc_path + "'");
        ScalarCsv csv = read_scalar_csv(in, a.g, 0.0);
        for (int x = 0; x < a.g.vertex_count(); ++x)
            if (csv.listed[x] && !a.part.is_boundary(x))
                throw Error("boundary-value row for interior vertex '" + a.g.label(x) + "'");
        bc = std::move(csv.field);
    }

    ObstacleSolution sol = solve_obstacle(a.g, a.part, f, bc, flags.config());
    {
        auto out = open_output(out_path);
        write_scalar_csv(out, a.g, sol.u);
    }
    if (!dot_path.empty()) {
        DensityField as_density(1, a.g.vertex_count());
        for (int x = 0; x < a.g.vertex_count(); ++x) as_density.at(0, x) = sol.u[x];
        write_dot_file(dot_path, a.g, a.part, &as_density);
    }
    print_report_line(std::cout, sol.report);
    if (!sol.report.converged) {
        std::cerr << "error: solver did not converge within " << flags.max_iters
                  << " iterations\n";
        return kExitNotCertified;
    }
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& problem_path,
               const std::string& solution_path, double eps) {
    if (!(eps > 0.0)) throw Error("--eps must be positive");
    Analyzed a = analyze(graph_path);
    SystemSpec spec = load_problem(problem_path, a.g, a.part);
    std::ifstream sin(solution_path);
    if (!sin) throw Error("cannot open solution file '" + solution_path + "'");
    DensityField u = read_density_csv(sin, a.g);
    if (u.m != spec.m)
        throw Error("solution has " + std::to_string(u.m) + " densities, problem expects " +
                    std::to_string(spec.m));

    bool all_pass = true;
    auto show = [&](const LemmaReport& r) {
        std::cout << r.check << ' ' << (r.pass ? "PASS" : "FAIL")
                  << " slack=" << format_double(r.slack);
        if (!r.pass) std::cout << " violations=" << r.violations.size();
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    };
    show(check_disjointness(u, eps));
    show(check_growth_inequality(a.g, a.part, spec, u, eps));

    const double residual = system_residual(a.g, a.part, spec, u);
    const bool res_ok = residual <= eps;
    std::cout << "residual " << (res_ok ? "PASS" : "FAIL") << " value=" << format_double(residual)
              << '\n';
    all_pass = all_pass && res_ok;

    return all_pass ? kExitOk : kExitNotCertified;
}

int run_unique(const std::string& graph_path, const std::string& problem_path, int starts,
               std::uint64_t seed, double init_max, const SolverFlags& flags) {
    Analyzed a = analyze(graph_path);
    SystemSpec spec = load_problem(problem_path, a.g, a.part);
    UniquenessResult result =
        uniqueness_harness(a.g, a.part, spec, flags.config(), starts, seed, init_max);
    for (const StartRun& run : result.runs) {
        std::cout << "run " << run.name << ' '
                  << (run.report.converged ? "converged" : "NOT-CONVERGED")
                  << " iterations=" << run.report.iterations
                  << " residual=" << format_double(run.report.final_residual) << '\n';
    }
    std::cout << "max_distance=" << format_double(result.max_distance) << '\n';
    std::cout << "all_converged=" << (result.all_converged ? "true" : "false") << '\n';
    return result.all_converged ? kExitOk : kExitNotCertified;
}

int run_energy(const std::string& graph_path, const std::string& field_path) {
    Graph g = load_graph(graph_path);
    std::ifstream in(field_path);
    if (!in) throw Error("cannot open field file '" + field_path + "'");
    DensityField u = read_density_csv(in, g);
    for (int l = 0; l < u.m; ++l)
        std::cout << 'u' << (l + 1) << ' ' << format_double(dirichlet_energy(g, u.component(l)))
                  << '\n';
    return kExitOk;
}

int run_eig(const std::string& graph_path, const std::string& subset_arg, bool print_vector) {
    Graph g = load_graph(graph_path);
    std::vector<int> subset;
    if (subset_arg.empty()) {
        for (int x = 0; x < g.vertex_count(); ++x) subset.push_back(x);
    } else {
        std::istringstream ss(subset_arg);
        std::string label;
        while (std::getline(ss, label, ',')) {
            const int x = g.index_of(label);
            if (x < 0) throw Error("unknown vertex '" + label + "' in --subset");
            subset.push_back(x);
        }
    }
    EigenPair pair = first_eigenvalue(g, subset);
    std::cout << "lambda1=" << format_double(pair.value) << '\n';
    if (print_vector)
        for (int x = 0; x < g.vertex_count(); ++x)
            std::cout << g.label(x) << ' ' << format_double(pair.vector[x]) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph segregation solver and certification toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "Generate a named graph");
    std::string gen_kind, gen_out = "-";
    int gen_n = 0, gen_rows = 0, gen_cols = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    generate_cmd->add_option("--kind", gen_kind,
                             "path|cycle|star|complete|grid2d|random_connected")
        ->required();
    generate_cmd->add_option("--n", gen_n, "Size (star: leaf count)");
    generate_cmd->add_option("--rows", gen_rows, "Grid rows");
    generate_cmd->add_option("--cols", gen_cols, "Grid columns");
    generate_cmd->add_option("--p", gen_p, "Edge probability for random_connected");
    generate_cmd->add_option("--seed", gen_seed, "Seed for random_connected");
    generate_cmd->add_option("--out", gen_out, "Output file, '-' for stdout");

    // boundary
    auto* boundary_cmd = app.add_subcommand("boundary", "Classify vertices as boundary/interior");
    std::string b_graph, b_dot;
    boundary_cmd->add_option("--graph", b_graph, "Edge-list file")->required();
    boundary_cmd->add_option("--dot", b_dot, "Write a Graphviz file");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve the implicit segregation system");
    std::string s_graph, s_problem, s_out, s_dot;
    SolverFlags s_flags;
    solve_cmd->add_option("--graph", s_graph, "Edge-list file")->required();
    solve_cmd->add_option("--problem", s_problem, "Problem JSON file")->required();
    solve_cmd->add_option("--out", s_out, "Solution CSV output")->required();
    solve_cmd->add_option("--dot", s_dot, "Write a Graphviz file of the solved field");
    s_flags.attach(solve_cmd);

    // obstacle
    auto* obstacle_cmd = app.add_subcommand("obstacle", "Solve the one-phase obstacle problem");
    std::string o_graph, o_f, o_bc, o_out, o_dot;
    SolverFlags o_flags;
    obstacle_cmd->add_option("--graph", o_graph, "Edge-list file")->required();
    obstacle_cmd->add_option("--f", o_f, "Load CSV (vertex,value; missing rows default to 0)");
    obstacle_cmd->add_option("--bc", o_bc, "Boundary values CSV (rows only for boundary vertices)");
    obstacle_cmd->add_option("--out", o_out, "Solution CSV output")->required();
    obstacle_cmd->add_option("--dot", o_dot, "Write a Graphviz file");
    o_flags.attach(obstacle_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Certify a candidate solution");
    std::string v_graph, v_problem, v_solution;
    double v_eps = 1e-8;
    verify_cmd->add_option("--graph", v_graph, "Edge-list file")->required();
    verify_cmd->add_option("--problem", v_problem, "Problem JSON file")->required();
    verify_cmd->add_option("--solution", v_solution, "Solution CSV")->required();
    verify_cmd->add_option("--eps", v_eps, "Check tolerance");

    // unique
    auto* unique_cmd = app.add_subcommand("unique", "Multi-start uniqueness probe");
    std::string u_graph, u_problem;
    int u_starts = 5;
    double u_init_max = -1.0;
    SolverFlags u_flags;
    unique_cmd->add_option("--graph", u_graph, "Edge-list file")->required();
    unique_cmd->add_option("--problem", u_problem, "Problem JSON file")->required();
    unique_cmd->add_option("--starts", u_starts, "Number of starts (>= 2)");
    unique_cmd->add_option("--init-max", u_init_max,
                           "Cap for random initial values (< 0: largest boundary value)");
    u_flags.attach(unique_cmd);

    // energy
    auto* energy_cmd = app.add_subcommand("energy", "Dirichlet energy of each field column");
    std::string e_graph, e_field;
    energy_cmd->add_option("--graph", e_graph, "Edge-list file")->required();
    energy_cmd->add_option("--field", e_field, "Field CSV")->required();

    // eig
    auto* eig_cmd = app.add_subcommand("eig", "Smallest restricted Laplacian eigenvalue");
    std::string g_graph, g_subset;
    bool g_vector = false;
    eig_cmd->add_option("--graph", g_graph, "Edge-list file")->required();
    eig_cmd->add_option("--subset", g_subset, "Comma-separated vertex labels (default: all)");
    eig_cmd->add_flag("--vector", g_vector, "Also print the eigenvector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help() << '\n';
        return kExitInputError;
    }

    try {
        if (*generate_cmd)
            return run_generate(gen_kind, gen_n, gen_rows, gen_cols, gen_p, gen_seed, gen_out);
        if (*boundary_cmd) return run_boundary(b_graph, b_dot);
        if (*solve_cmd) return run_solve(s_graph, s_problem, s_out, s_dot, s_flags);
        if (*obstacle_cmd) return run_obstacle(o_graph, o_f, o_bc, o_out, o_dot, o_flags);
        if (*verify_cmd) return run_verify(v_graph, v_problem, v_solution, v_eps);
        if (*unique_cmd)
            return run_unique(u_graph, u_problem, u_starts, u_flags.seed, u_init_max, u_flags);
        if (*energy_cmd) return run_energy(e_graph, e_field);
        if (*eig_cmd) return run_eig(g_graph, g_subset, g_vector);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
