#include "graphseg/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace graphseg {

ScalarField DensityField::component(int l) const {
    if (l < 0 || l >= m) throw Error("density index out of range");
    ScalarField f(n);
    for (int x = 0; x < n; ++x) f[x] = at(l, x);
    return f;
}

double mean_value(const Graph& g, const ScalarField& f, int x) {
    const int deg = g.degree(x);
    if (deg == 0) throw Error("mean value is undefined at isolated vertex '" + g.label(x) + "'");
    double sum = 0.0;
    for (int y : g.neighbors(x)) sum += f[y];
    return sum / deg;
}

double mean_component(const Graph& g, const DensityField& u, int l, int x) {
    const int deg = g.degree(x);
    if (deg == 0) throw Error("mean value is undefined at isolated vertex '" + g.label(x) + "'");
    double sum = 0.0;
    for (int y : g.neighbors(x)) sum += u.at(l, y);
    return sum / deg;
}

ScalarField hat_field(const DensityField& u, int l) {
    if (l < 0 || l >= u.m) throw Error("density index out of range");
    ScalarField h(u.n);
    for (int x = 0; x < u.n; ++x) h[x] = hat_value(u, l, x);
    return h;
}

double hat_value(const DensityField& u, int l, int x) {
    // Summed as u^l minus the others (not 2u^l - total) so that m = 2 gives
    // hat(u)^1 == -hat(u)^2 exactly in floating point.
    double others = 0.0;
    for (int p = 0; p < u.m; ++p)
        if (p != l) others += u.at(p, x);
    return u.at(l, x) - others;
}

double laplacian_apply(const Graph& g, const ScalarField& f, int x) {
    double sum = 0.0;
    for (int y : g.neighbors(x)) sum += f[y] - f[x];
    return sum;
}

double dirichlet_energy(const Graph& g, const ScalarField& f) {
    double energy = 0.0;
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto& nbr = g.neighbors(x);
        const auto& w = g.neighbor_weights(x);
        for (std::size_t i = 0; i < nbr.size(); ++i)
            if (x < nbr[i]) {
                const double d = f[x] - f[nbr[i]];
                energy += w[i] * d * d;
            }
    }
    return energy;
}

namespace {

// Cyclic Jacobi eigen-iteration on a dense symmetric matrix, accumulating
// rotations. Converges quadratically; the off-diagonal Frobenius norm is
// driven below 1e-12.
struct JacobiEigen {
    int k;
    std::vector<double> a;  // k x k, row-major
    std::vector<double> v;  // accumulated rotations

    explicit JacobiEigen(int k_, std::vector<double> a_) : k(k_), a(std::move(a_)) {
        v.assign(static_cast<std::size_t>(k) * k, 0.0);
        for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i) * k + i] = 1.0;
    }

    double& A(int i, int j) { return a[static_cast<std::size_t>(i) * k + j]; }
    double& V(int i, int j) { return v[static_cast<std::size_t>(i) * k + j]; }

    double off_norm() const {
        double s = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const double x = a[static_cast<std::size_t>(i) * k + j];
                s += 2.0 * x * x;
            }
        return std::sqrt(s);
    }

    void rotate(int p, int q) {
        const double apq = A(p, q);
        if (apq == 0.0) return;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = A(p, p), aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int i = 0; i < k; ++i) {
            if (i != p && i != q) {
                const double aip = A(i, p), aiq = A(i, q);
                A(i, p) = aip - s * (aiq + tau * aip);
                A(p, i) = A(i, p);
                A(i, q) = aiq + s * (aip - tau * aiq);
                A(q, i) = A(i, q);
            }
            const double vip = V(i, p), viq = V(i, q);
            V(i, p) = vip - s * (viq + tau * vip);
            V(i, q) = viq + s * (vip - tau * viq);
        }
    }

    void run() {
        constexpr int max_sweeps = 100;
        for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-12; ++sweep)
            for (int p = 0; p < k; ++p)
                for (int q = p + 1; q < k; ++q) rotate(p, q);
    }
};

} // namespace

EigenPair first_eigenvalue(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw Error("eigenvalue subset must be nonempty");
    const int n = g.vertex_count();
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    if (s.front() < 0 || s.back() >= n) throw Error("subset vertex out of range");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error("subset contains a duplicate vertex");

    const int k = static_cast<int>(s.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i) pos[s[i]] = i;

    // Weighted Laplacian restricted to S: full weighted degree on the
    // diagonal, -w for edges inside S.
    std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        const int x = s[i];
        a[static_cast<std::size_t>(i) * k + i] = g.weighted_degree(x);
        const auto& nbr = g.neighbors(x);
        const auto& w = g.neighbor_weights(x);
        for (std::size_t j = 0; j < nbr.size(); ++j)
            if (pos[nbr[j]] >= 0) a[static_cast<std::size_t>(i) * k + pos[nbr[j]]] -= w[j];
    }

    JacobiEigen jac(k, std::move(a));
    jac.run();

    int best = 0;
    for (int i = 1; i < k; ++i)
        if (jac.A(i, i) < jac.A(best, best)) best = i;

    EigenPair result;
    result.value = jac.A(best, best);
    result.vector = ScalarField(n, 0.0);
    double norm = 0.0;
    for (int i = 0; i < k; ++i) norm += jac.V(i, best) * jac.V(i, best);
    norm = std::sqrt(norm);
    int lead = 0;
    for (int i = 1; i < k; ++i)
        if (std::abs(jac.V(i, best)) > std::abs(jac.V(lead, best))) lead = i;
    const double sign = jac.V(lead, best) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < k; ++i) result.vector[s[i]] = sign * jac.V(i, best) / norm;
    return result;
}

double sup_distance(const DensityField& a, const DensityField& b) {
    if (a.m != b.m || a.n != b.n) throw Error("density fields have mismatched dimensions");
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

} // namespace graphseg
