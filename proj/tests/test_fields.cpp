#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphseg/fields.hpp"
#include "graphseg/rng.hpp"
#include "support.hpp"

using namespace graphseg;

namespace {

ScalarField field(std::vector<double> v) {
    ScalarField f;
    f.values = std::move(v);
    return f;
}

} // namespace

TEST_CASE("mean_value") {
    Graph g = generate_path(3);
    ScalarField constant(3, 4.25);
    for (int x = 0; x < 3; ++x) CHECK(mean_value(g, constant, x) == doctest::Approx(4.25));

    ScalarField bump = field({0.0, 1.0, 0.0});
    CHECK(mean_value(g, bump, 1) == 0.0);
    CHECK(mean_value(g, bump, 0) == 1.0);

    Graph isolated = Graph::from_edges(2, {});
    CHECK_THROWS_AS(mean_value(isolated, ScalarField(2, 0.0), 0), Error);
}

TEST_CASE("mean_value is linear") {
    Graph g = generate_random_connected(15, 0.3, 4);
    Rng rng(21);
    ScalarField f(15), h(15);
    for (int x = 0; x < 15; ++x) {
        f[x] = rng.real(-3.0, 3.0);
        h[x] = rng.real(-3.0, 3.0);
    }
    const double alpha = 1.7, beta = -0.4;
    ScalarField combo(15);
    for (int x = 0; x < 15; ++x) combo[x] = alpha * f[x] + beta * h[x];
    for (int x = 0; x < 15; ++x)
        CHECK(std::abs(mean_value(g, combo, x) -
                       (alpha * mean_value(g, f, x) + beta * mean_value(g, h, x))) <= 1e-12);
}

TEST_CASE("hat_field") {
    DensityField single(1, 2);
    single.at(0, 0) = 3.0;
    single.at(0, 1) = 0.5;
    ScalarField h1 = hat_field(single, 0);
    CHECK(h1[0] == 3.0);
    CHECK(h1[1] == 0.5);

    DensityField two(2, 1);
    two.at(0, 0) = 5.0;
    two.at(1, 0) = 2.0;
    CHECK(hat_value(two, 0, 0) == 3.0);
    CHECK(hat_value(two, 1, 0) == -3.0);

    DensityField three(3, 1);
    three.at(0, 0) = 1.0;
    three.at(1, 0) = 0.0;
    three.at(2, 0) = 2.0;
    CHECK(hat_value(three, 0, 0) == -1.0);
    CHECK(hat_value(three, 2, 0) == 1.0);

    CHECK_THROWS_AS(hat_field(two, 2), Error);
    CHECK_THROWS_AS(hat_field(two, -1), Error);
}

TEST_CASE("hat fields for m=2 are exact opposites") {
    Rng rng(5);
    DensityField u(2, 9);
    for (int l = 0; l < 2; ++l)
        for (int x = 0; x < 9; ++x) u.at(l, x) = rng.real(0.0, 2.0);
    for (int x = 0; x < 9; ++x) CHECK(hat_value(u, 0, x) == -hat_value(u, 1, x));
}

TEST_CASE("laplacian_apply") {
    Graph g = generate_path(3);
    ScalarField constant(3, 2.0);
    for (int x = 0; x < 3; ++x) CHECK(laplacian_apply(g, constant, x) == 0.0);

    ScalarField bump = field({0.0, 1.0, 0.0});
    CHECK(laplacian_apply(g, bump, 1) == -2.0);
    CHECK(laplacian_apply(g, bump, 0) == 1.0);
}

TEST_CASE("laplacian equals deg * (mean - value) on unweighted graphs") {
    Graph g = generate_random_connected(20, 0.25, 9);
    Rng rng(10);
    ScalarField f(20);
    for (int x = 0; x < 20; ++x) f[x] = rng.real(-5.0, 5.0);
    for (int x = 0; x < 20; ++x)
        CHECK(laplacian_apply(g, f, x) ==
              doctest::Approx(g.degree(x) * (mean_value(g, f, x) - f[x])).epsilon(1e-12));
}

TEST_CASE("dirichlet_energy") {
    Graph g = generate_path(3);
    CHECK(dirichlet_energy(g, ScalarField(3, 7.0)) == 0.0);
    CHECK(dirichlet_energy(g, field({0.0, 1.0, 0.0})) == 2.0);

    Graph edge = parse_edge_list("a b 3.5");
    CHECK(dirichlet_energy(edge, field({1.0, 3.0})) == doctest::Approx(14.0));
}

TEST_CASE("dirichlet energy equals the quadratic form of the laplacian") {
    // I_n(f) = f^T (D - A) f for unit weights: the (1/2) in the ordered
    // double-sum definition cancels against counting each edge twice.
    Graph g = generate_random_connected(18, 0.3, 44);
    Rng rng(45);
    ScalarField f(18);
    for (int x = 0; x < 18; ++x) f[x] = rng.real(-2.0, 2.0);
    double quad = 0.0;
    for (int x = 0; x < 18; ++x) quad += f[x] * (-laplacian_apply(g, f, x));
    CHECK(dirichlet_energy(g, f) == doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("first_eigenvalue on singletons equals the weighted degree") {
    Graph g = parse_edge_list("a b 2\nb c 0.5\na c 4");
    for (int x = 0; x < 3; ++x) {
        EigenPair p = first_eigenvalue(g, {x});
        CHECK(p.value == doctest::Approx(g.weighted_degree(x)).epsilon(1e-12));
        CHECK(p.vector[x] == doctest::Approx(1.0));
    }
}

TEST_CASE("first_eigenvalue of the whole connected graph is zero") {
    Graph g = generate_random_connected(12, 0.3, 3);
    std::vector<int> all;
    for (int x = 0; x < 12; ++x) all.push_back(x);
    EigenPair p = first_eigenvalue(g, all);
    CHECK(std::abs(p.value) <= 1e-9);
    const double expected = 1.0 / std::sqrt(12.0);
    for (int x = 0; x < 12; ++x) CHECK(p.vector[x] == doctest::Approx(expected).epsilon(1e-6));

    Graph p2 = generate_path(2);
    CHECK(std::abs(first_eigenvalue(p2, {0, 1}).value) <= 1e-12);
}

TEST_CASE("first_eigenvalue on a path-3 prefix matches the hand value") {
    // L restricted to {v1, v2} is [[1, -1], [-1, 2]]; smallest root of
    // x^2 - 3x + 1 is (3 - sqrt(5)) / 2.
    Graph g = generate_path(3);
    EigenPair p = first_eigenvalue(g, {0, 1});
    CHECK(p.value == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(p.vector[2] == 0.0);
    // eigen residual: L v = lambda v on the subset rows
    CHECK(1.0 * p.vector[0] - p.vector[1] == doctest::Approx(p.value * p.vector[0]));
    CHECK(-p.vector[0] + 2.0 * p.vector[1] == doctest::Approx(p.value * p.vector[1]));
    const double norm = p.vector[0] * p.vector[0] + p.vector[1] * p.vector[1];
    CHECK(norm == doctest::Approx(1.0));
}

TEST_CASE("first_eigenvalue is monotone under subset inclusion") {
    Rng rng(606);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 6 + rng.index(15);
        Graph g = generate_random_connected(n, 0.35, 500 + trial);
        std::vector<int> t;
        for (int x = 0; x < n; ++x)
            if (rng.real01() < 0.7) t.push_back(x);
        if (t.empty()) t.push_back(rng.index(n));
        std::vector<int> s;
        for (int x : t)
            if (rng.real01() < 0.6) s.push_back(x);
        if (s.empty()) s.push_back(t[0]);
        const double lam_t = first_eigenvalue(g, t).value;
        const double lam_s = first_eigenvalue(g, s).value;
        CHECK(lam_s >= lam_t - 1e-9);
    }
}

TEST_CASE("first_eigenvalue rejections") {
    Graph g = generate_path(3);
    CHECK_THROWS_AS(first_eigenvalue(g, {}), Error);
    CHECK_THROWS_AS(first_eigenvalue(g, {0, 0}), Error);
    CHECK_THROWS_AS(first_eigenvalue(g, {5}), Error);
}

TEST_CASE("sup_distance") {
    DensityField a(2, 3), b(2, 3);
    a.at(1, 2) = 0.5;
    b.at(1, 2) = 0.2;
    b.at(0, 0) = 0.1;
    CHECK(sup_distance(a, b) == doctest::Approx(0.3));
    DensityField c(1, 3);
    CHECK_THROWS_AS(sup_distance(a, c), Error);
}
