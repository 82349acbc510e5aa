#include "curvachay/curvature_matrix.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "curvachay/errors.hpp"
#include "curvachay/jacobi.hpp"

namespace curvachay {

namespace {

void spheres(const LocalGraph& g, int x, std::vector<int>& s1, std::vector<int>& s2) {
    std::vector<int> dist = g.bfs_distances(x);
    for (int v = 0; v < g.n(); ++v) {
        if (dist[v] == 1) s1.push_back(v);
        if (dist[v] == 2) s2.push_back(v);
    }
}

}  // namespace

std::vector<std::vector<double>> CurvatureMatrixResult::a_float() const {
    const int n = q.rows();
    std::vector<double> dinv(n);
    for (int i = 0; i < n; ++i) dinv[i] = 1.0 / std::sqrt(to_double(sphere_weights[i]));
    double scale = 2.0 * to_double(measure_x);
    std::vector<std::vector<double>> out(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = scale * dinv[i] * to_double(q.at(i, j)) * dinv[j];
    return out;
}

CurvatureMatrixResult curvature_matrix(const LocalGraph& g, int x, const LaplacianKind& kind) {
    if (!g.certifies(x, 2)) throw InsufficientRadius("curvature matrix requires a certified 2-ball");
    if (g.degree(x) == 0) throw InvalidInput("curvature is undefined at an isolated vertex");

    CurvatureMatrixResult res;
    spheres(g, x, res.s1, res.s2);
    const int m = static_cast<int>(res.s1.size());
    const int n = static_cast<int>(res.s2.size());

    // Gamma2 as a quadratic form over f values on S1 u S2 with f(x) = 0,
    // entries by bilinear evaluation on indicator pairs.
    std::vector<int> support = res.s1;
    support.insert(support.end(), res.s2.begin(), res.s2.end());
    res.gamma2_form = RatMatrix(m + n, m + n);
    std::vector<Rational> fu(g.n(), Rational(0)), fv(g.n(), Rational(0));
    for (int i = 0; i < m + n; ++i) {
        fu[support[i]] = 1;
        for (int j = i; j < m + n; ++j) {
            fv[support[j]] = 1;
            Rational val = gamma2(g, kind, fu, fv, x);
            res.gamma2_form.at(i, j) = val;
            res.gamma2_form.at(j, i) = val;
            fv[support[j]] = 0;
        }
        fu[support[i]] = 0;
    }

    std::vector<int> keep(m), elim(n);
    std::iota(keep.begin(), keep.end(), 0);
    std::iota(elim.begin(), elim.end(), m);
    res.q = schur_complement(res.gamma2_form, keep, elim);

    res.measure_x = vertex_measure(g, kind, x);
    res.sphere_weights.reserve(m);
    bool unit = res.measure_x == 1;
    for (int y : res.s1) {
        res.sphere_weights.push_back(edge_weight(g, kind, x, y));
        unit = unit && res.sphere_weights.back() == 1;
    }
    res.exact = unit;
    if (unit) res.a = res.q.scaled(2);
    return res;
}

RatMatrix curvature_matrix_closed_form(const LocalGraph& g, int x) {
    if (!g.certifies(x, 2)) throw InsufficientRadius("curvature matrix requires a certified 2-ball");
    for (int y : g.neighbors(x))
        if (g.weight(x, y) != 1) throw InvalidInput("closed form requires unit weights");

    std::vector<int> s1, s2;
    spheres(g, x, s1, s2);
    const int d = static_cast<int>(s1.size());

    RatMatrix a = RatMatrix::all_ones(d);
    Rational half(1, 2);

    // -2 L_{S1}: Laplacian of the induced 1-sphere subgraph
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            if (g.adjacent(s1[i], s1[j])) {
                if (g.weight(s1[i], s1[j]) != 1) throw InvalidInput("closed form requires unit weights");
                a.at(i, j) -= 2;
                a.at(i, i) += 2;
            }
        }

    // -2 L_{S1'}: weights w_ij = sum over common 2-sphere neighbours of
    // 1/indeg(z)
    std::vector<std::vector<int>> in_nbrs(s2.size());
    std::vector<int> s2_index(g.n(), -1);
    for (std::size_t k = 0; k < s2.size(); ++k) s2_index[s2[k]] = static_cast<int>(k);
    for (int i = 0; i < d; ++i)
        for (int z : g.neighbors(s1[i]))
            if (s2_index[z] >= 0) in_nbrs[s2_index[z]].push_back(i);
    for (std::size_t k = 0; k < s2.size(); ++k) {
        Rational inv_deg(1, static_cast<long>(in_nbrs[k].size()));
        for (int i : in_nbrs[k])
            for (int j : in_nbrs[k]) {
                if (i == j) continue;
                a.at(i, j) -= 2 * inv_deg;
                a.at(i, i) += 2 * inv_deg;
            }
    }

    // (3-D)/2 Id - diag(d+)/2
    for (int i = 0; i < d; ++i) {
        a.at(i, i) += Rational(3 - d) * half;
        int out_deg = 0;
        for (int z : g.neighbors(s1[i])) out_deg += s2_index[z] >= 0;
        a.at(i, i) -= Rational(out_deg) * half;
    }
    return a;
}

CurvatureValue bakry_emery(const LocalGraph& g, int x, const LaplacianKind& kind,
                           const BakryEmeryOptions& opts) {
    CurvatureMatrixResult cm = curvature_matrix(g, x, kind);
    const int m = static_cast<int>(cm.s1.size());
    const int n = static_cast<int>(cm.s2.size());

    EigenDecomposition eig = jacobi_eigen(cm.a_float(), opts.jacobi_tol);

    CurvatureValue out;
    out.value = eig.values.front();
    out.eigenvector = eig.vectors.front();
    out.s1 = cm.s1;
    out.s2 = cm.s2;
    if (m == 1 && cm.exact) out.exact = cm.a.at(0, 0);

    // witness function: f1 = sqrt(m(x)/...) D^-1 v up to scale, completed on
    // the 2-sphere by the minimizing tail of the Schur derivation
    std::vector<double> f1(m);
    for (int i = 0; i < m; ++i)
        f1[i] = out.eigenvector[i] / std::sqrt(to_double(cm.sphere_weights[i]));
    std::vector<double> f2(n, 0.0);
    if (n > 0) {
        std::vector<int> keep(m), elim(n);
        std::iota(keep.begin(), keep.end(), 0);
        std::iota(elim.begin(), elim.end(), m);
        RatMatrix b22 = cm.gamma2_form.submatrix(elim, elim);
        RatMatrix b21 = cm.gamma2_form.submatrix(elim, keep);
        auto inv = b22.inverse();
        if (!inv) throw SingularBlock("2-sphere block is singular");
        RatMatrix tail = (*inv) * b21;  // f2 = -tail f1
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < m; ++i) f2[k] -= to_double(tail.at(k, i)) * f1[i];
    }
    out.witness_f = f1;
    out.witness_f.insert(out.witness_f.end(), f2.begin(), f2.end());

    // the witness achieves equality in Gamma2 f - K Gamma f >= 0; evaluate
    // the exact forms at the float witness
    {
        auto g2_form = cm.gamma2_form.to_double();
        double g2 = 0;
        for (int i = 0; i < m + n; ++i)
            for (int j = 0; j < m + n; ++j) g2 += out.witness_f[i] * g2_form[i][j] * out.witness_f[j];
        double g1 = 0;
        for (int i = 0; i < m; ++i)
            g1 += out.witness_f[i] * out.witness_f[i] * to_double(cm.sphere_weights[i]);
        g1 /= 2.0 * to_double(cm.measure_x);
        out.witness_gap = g2 - out.value * g1;
        if (std::fabs(out.witness_gap) > 1e-6)
            throw Error("curvature witness fails to achieve the optimum");
    }

    // definitional soundness on random rational functions over the support
    auto check = [&](const std::vector<Rational>& f) {
        double g2 = to_double(gamma2(g, kind, f, x));
        double g1 = to_double(gamma(g, kind, f, x));
        return g2 - out.value * g1;
    };
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 8);
    for (int trial = 0; trial < opts.soundness_samples; ++trial) {
        std::vector<Rational> f(g.n(), Rational(0));
        for (int i = 0; i < m; ++i) f[cm.s1[i]] = rat(num(rng), den(rng));
        for (int k = 0; k < n; ++k) f[cm.s2[k]] = rat(num(rng), den(rng));
        if (check(f) < -opts.soundness_slack)
            throw Error("definitional curvature inequality violated by a sampled function");
    }
    return out;
}

std::string curvature_value_to_json(const CurvatureValue& k) {
    nlohmann::ordered_json j;
    j["value_rational"] = k.exact ? nlohmann::ordered_json(to_fraction_string(*k.exact))
                                  : nlohmann::ordered_json(nullptr);
    j["value_float"] = k.value;
    nlohmann::ordered_json w;
    w["eigenvector"] = k.eigenvector;
    w["f"] = k.witness_f;
    w["sphere_1"] = k.s1;
    w["sphere_2"] = k.s2;
    w["gap"] = k.witness_gap;
    j["witness"] = w;
    return j.dump();
}

}  // namespace curvachay
