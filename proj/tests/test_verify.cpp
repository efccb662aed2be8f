#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphseg/rng.hpp"
#include "graphseg/verify.hpp"
#include "support.hpp"

using namespace graphseg;

namespace {

struct Instance {
    Graph g;
    DistanceTable dt;
    VertexPartition part;
    SystemSpec spec;
};

Instance two_phase_path5() {
    Instance inst;
    inst.g = generate_path(5);
    inst.dt = all_pairs_hop_distances(inst.g);
    inst.part = detect_boundary(inst.g, inst.dt);
    BoundaryData phi(2, 5);
    phi.set(0, 0, 1.0);
    phi.set(1, 4, 1.0);
    inst.spec = make_system(inst.g, inst.part, 2, "s", {"0", "0"}, phi);
    return inst;
}

DensityField exact_two_phase() {
    DensityField u(2, 5);
    u.at(0, 0) = 1.0;
    u.at(0, 1) = 0.5;
    u.at(1, 3) = 0.5;
    u.at(1, 4) = 1.0;
    return u;
}

Instance random_instance(std::uint64_t seed, int n, int m) {
    Instance inst;
    inst.g = generate_random_connected(n, 0.18, seed);
    inst.dt = all_pairs_hop_distances(inst.g);
    inst.part = detect_boundary(inst.g, inst.dt);
    Rng rng(seed + 5000);
    BoundaryData phi(m, n);
    for (int b : inst.part.boundary) phi.set(rng.index(m), b, 0.05 + 0.95 * rng.real01());
    std::vector<std::string> f_exprs;
    for (int l = 0; l < m; ++l) f_exprs.push_back(l % 2 ? "0.1 * s" : "0");
    inst.spec = make_system(inst.g, inst.part, m, seed % 2 ? "tanh(s)" : "s", f_exprs, phi);
    return inst;
}

} // namespace

TEST_CASE("disjointness on the exact two-phase solution") {
    LemmaReport r = check_disjointness(exact_two_phase(), 1e-8);
    CHECK(r.pass);
    CHECK(r.slack == 0.0);
}

TEST_CASE("disjointness flags overlapping supports") {
    DensityField u(2, 3);
    u.at(0, 1) = 0.3;
    u.at(1, 1) = 0.3;
    LemmaReport r = check_disjointness(u, 1e-8);
    CHECK_FALSE(r.pass);
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].vertex == 1);
    CHECK(r.violations[0].density == 0);
    CHECK(r.violations[1].density == 1);
    CHECK(r.slack == doctest::Approx(0.3));
}

TEST_CASE("disjointness is vacuous for one density") {
    DensityField u(1, 4);
    for (int x = 0; x < 4; ++x) u.at(0, x) = 1.0 + x;
    LemmaReport r = check_disjointness(u, 1e-8);
    CHECK(r.pass);
    CHECK(r.slack == 0.0);
}

TEST_CASE("growth inequality on the exact two-phase solution") {
    Instance inst = two_phase_path5();
    LemmaReport r = check_growth_inequality(inst.g, inst.part, inst.spec,
                                            exact_two_phase(), 1e-8);
    CHECK(r.pass);
    // every interior row of this instance achieves equality
    CHECK(std::abs(r.slack) <= 1e-12);
}

TEST_CASE("growth inequality on a harmonic solution has zero slack") {
    Instance inst;
    inst.g = generate_path(5);
    inst.dt = all_pairs_hop_distances(inst.g);
    inst.part = detect_boundary(inst.g, inst.dt);
    BoundaryData phi(1, 5);
    phi.set(0, 4, 1.0);
    inst.spec = make_system(inst.g, inst.part, 1, "s", {"0"}, phi);
    DensityField u(1, 5);
    for (int x = 0; x < 5; ++x) u.at(0, x) = 0.25 * x;
    LemmaReport r = check_growth_inequality(inst.g, inst.part, inst.spec, u, 1e-8);
    CHECK(r.pass);
    CHECK(std::abs(r.slack) <= 1e-12);
}

TEST_CASE("growth inequality detects a hand-built violation") {
    // u1 vanishes at the middle vertex while both neighbors carry mass, so
    // H(mean) - hat = H(1) = 1 > 0 = f at v2.
    Instance inst;
    inst.g = generate_path(3);
    inst.dt = all_pairs_hop_distances(inst.g);
    inst.part = detect_boundary(inst.g, inst.dt);
    BoundaryData phi(2, 3);
    phi.set(0, 0, 1.0);
    phi.set(0, 2, 1.0);
    inst.spec = make_system(inst.g, inst.part, 2, "s", {"0", "0"}, phi);

    DensityField u(2, 3);
    u.at(0, 0) = 1.0;
    u.at(0, 2) = 1.0;
    LemmaReport r = check_growth_inequality(inst.g, inst.part, inst.spec, u, 1e-8);
    CHECK_FALSE(r.pass);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].vertex == 1);
    CHECK(r.violations[0].density == 0);
    CHECK(r.slack == doctest::Approx(1.0));  // H(1) - 0
}

TEST_CASE("compute_AB basics") {
    DensityField u = exact_two_phase();
    ABDiagnostic same = compute_AB(u, u);
    CHECK(same.A == 0.0);
    CHECK(same.B == 0.0);

    DensityField v = u;
    v.at(0, 1) = 0.4;
    ABDiagnostic diag = compute_AB(u, v);
    CHECK(diag.A == doctest::Approx(0.1));
    CHECK(diag.a_at.density == 0);
    CHECK(diag.a_at.vertex == 1);
    CHECK(diag.B == doctest::Approx(0.1));
    CHECK(diag.b_at.density == 1);
    CHECK(diag.b_at.vertex == 1);
    // A's argmax does not sit on {u <= v}: u1(v2) = 0.5 > 0.4 = v1(v2)
    CHECK_FALSE(diag.a_at.on_le_set);

    DensityField wrong(1, 5);
    CHECK_THROWS_AS(compute_AB(u, wrong), Error);
}

TEST_CASE("A and B swap under argument exchange") {
    Rng rng(17);
    DensityField u(3, 6), v(3, 6);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        u.values[i] = rng.real01();
        v.values[i] = rng.real01();
    }
    ABDiagnostic forward = compute_AB(u, v);
    ABDiagnostic backward = compute_AB(v, u);
    CHECK(forward.A == backward.B);
    CHECK(forward.B == backward.A);
    CHECK(forward.a_at.vertex == backward.b_at.vertex);
    CHECK(forward.a_at.density == backward.b_at.density);
}

TEST_CASE("A and B vanish across schemes on a genuine solution pair") {
    Instance inst = random_instance(301, 22, 3);
    SolverConfig jac;
    SolverConfig gs;
    gs.scheme = Scheme::gauss_seidel;
    SystemSolution a = solve_system(inst.g, inst.part, inst.spec, jac);
    SystemSolution b = solve_system(inst.g, inst.part, inst.spec, gs);
    REQUIRE(a.report.converged);
    REQUIRE(b.report.converged);
    ABDiagnostic diag = compute_AB(a.u, b.u);
    CHECK(diag.A <= 1e-8);
    CHECK(diag.B <= 1e-8);

    LemmaReport location = check_max_location(a.u, b.u, 1e-8);
    CHECK(location.pass);
    LemmaReport chain = check_inclusion_chain(a.u, b.u, 1e-8, 1e-8);
    CHECK(chain.pass);
}

TEST_CASE("max_location flags a non-solution pair") {
    DensityField u = exact_two_phase();
    DensityField v = u;
    v.at(0, 1) = 0.4;  // not a solution: the max of hat-u1 - hat-v1 sits at v2
    LemmaReport r = check_max_location(u, v, 1e-8);
    CHECK_FALSE(r.pass);
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].density == 0);
    CHECK(r.violations[0].vertex == 1);
}

TEST_CASE("inclusion chain flags engineered gaps") {
    // u1 > v1 at a vertex where the hat difference is pushed negative by a
    // large opposing density.
    DensityField u(2, 1), v(2, 1);
    u.at(0, 0) = 1.0;
    u.at(1, 0) = 5.0;
    v.at(0, 0) = 0.5;
    v.at(1, 0) = 0.0;
    // u1 - v1 = 0.5 > eps, hat u1 - hat v1 = (1-5) - 0.5 = -4.5
    LemmaReport r = check_inclusion_chain(u, v, 1e-8, 1e-8);
    CHECK_FALSE(r.pass);
}

TEST_CASE("uniqueness harness on the two-phase path") {
    Instance inst = two_phase_path5();
    SolverConfig cfg;
    cfg.scheme = Scheme::gauss_seidel;
    UniquenessResult result = uniqueness_harness(inst.g, inst.part, inst.spec, cfg, 5, 42);
    CHECK(result.all_converged);
    CHECK(result.runs.size() == 6);  // zero x2 schemes + 4 random starts
    CHECK(result.max_distance <= 1e-6);
    CHECK(result.runs[0].name == "zero/jacobi");
    CHECK(result.runs[1].name == "zero/gauss_seidel");

    CHECK_THROWS_AS(uniqueness_harness(inst.g, inst.part, inst.spec, cfg, 1, 42), Error);
}

TEST_CASE("uniqueness harness is deterministic") {
    Instance inst = random_instance(99, 15, 2);
    SolverConfig cfg;
    cfg.scheme = Scheme::gauss_seidel;
    UniquenessResult a = uniqueness_harness(inst.g, inst.part, inst.spec, cfg, 4, 7);
    UniquenessResult b = uniqueness_harness(inst.g, inst.part, inst.spec, cfg, 4, 7);
    CHECK(a.max_distance == b.max_distance);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i)
        CHECK(a.runs[i].report.iterations == b.runs[i].report.iterations);
}

TEST_CASE("deterministic solver: identical starts give identical fields") {
    Instance inst = two_phase_path5();
    SystemSolution a = solve_system(inst.g, inst.part, inst.spec, SolverConfig{});
    SystemSolution b = solve_system(inst.g, inst.part, inst.spec, SolverConfig{});
    CHECK(sup_distance(a.u, b.u) == 0.0);
}

TEST_CASE("converged solutions pass the whole lemma suite") {
    for (std::uint64_t seed : {601u, 602u}) {
        Instance inst = random_instance(seed, 20, static_cast<int>(2 + seed % 3));
        SystemSolution sol = solve_system(inst.g, inst.part, inst.spec, SolverConfig{});
        REQUIRE(sol.report.converged);
        CHECK(check_disjointness(sol.u, 1e-8).pass);
        CHECK(check_growth_inequality(inst.g, inst.part, inst.spec, sol.u, 1e-8).pass);
        CHECK(system_residual(inst.g, inst.part, inst.spec, sol.u) <= 1e-8);
    }
}
