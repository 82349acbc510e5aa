#include "curvachay/laplacian.hpp"

#include "curvachay/errors.hpp"
#include "curvachay/matrix.hpp"

namespace curvachay {

LaplacianKind LaplacianKind::random_walk(Rational p) {
    if (p < 0 || p >= 1) throw InvalidInput("random walk idleness must lie in [0,1)");
    return {Type::random_walk, std::move(p)};
}

Rational vertex_measure(const LocalGraph& g, const LaplacianKind& kind, int x) {
    switch (kind.type) {
        case LaplacianKind::Type::non_normalized:
            return 1;
        case LaplacianKind::Type::normalized:
            return g.degree(x);
        case LaplacianKind::Type::weighted:
            return g.measure(x);
        case LaplacianKind::Type::random_walk:
            return Rational(g.degree(x)) / (Rational(1) - kind.idleness);
    }
    return 1;
}

Rational edge_weight(const LocalGraph& g, const LaplacianKind& kind, int u, int v) {
    if (kind.type == LaplacianKind::Type::weighted) return g.weight(u, v);
    return 1;
}

namespace {

void require_interior(const LocalGraph& g, int x, int depth) {
    if (!g.certifies(x, depth))
        throw InsufficientRadius("vertex neighbourhood exceeds the certified ball radius");
}

}  // namespace

Rational laplacian_apply(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                         int x) {
    if (f.size() != static_cast<std::size_t>(g.n())) throw InvalidInput("function not defined on every vertex");
    require_interior(g, x, 1);
    Rational acc = 0;
    for (int y : g.neighbors(x)) acc += edge_weight(g, kind, x, y) * (f[y] - f[x]);
    return acc / vertex_measure(g, kind, x);
}

RatMatrix laplacian_matrix(const LocalGraph& g, const LaplacianKind& kind) {
    RatMatrix m(g.n(), g.n());
    for (int x = 0; x < g.n(); ++x) {
        Rational mx = vertex_measure(g, kind, x);
        for (int y : g.neighbors(x)) {
            Rational w = edge_weight(g, kind, x, y) / mx;
            m.at(x, y) += w;
            m.at(x, x) -= w;
        }
    }
    return m;
}

Rational gamma(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
               const std::vector<Rational>& h, int x) {
    require_interior(g, x, 1);
    Rational acc = 0;
    for (int y : g.neighbors(x)) acc += edge_weight(g, kind, x, y) * (f[y] - f[x]) * (h[y] - h[x]);
    return acc / (2 * vertex_measure(g, kind, x));
}

Rational gamma2(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                const std::vector<Rational>& h, int x) {
    require_interior(g, x, 2);

    // Delta Gamma(f,h) at x needs Gamma on B1(x); Gamma(f, Delta h) at x
    // needs Delta h on B1(x); everything stays inside B2(x).
    Rational mx = vertex_measure(g, kind, x);
    Rational gamma_x = gamma(g, kind, f, h, x);
    Rational df_x = laplacian_apply(g, kind, f, x);
    Rational dh_x = laplacian_apply(g, kind, h, x);

    Rational acc = 0;
    for (int y : g.neighbors(x)) {
        Rational w = edge_weight(g, kind, x, y);
        Rational gamma_y = gamma(g, kind, f, h, y);
        Rational df_y = laplacian_apply(g, kind, f, y);
        Rational dh_y = laplacian_apply(g, kind, h, y);
        // Delta Gamma term
        acc += w * (gamma_y - gamma_x);
        // -2 Gamma(f, Delta h)(x) and -2 Gamma(h, Delta f)(x), expanded
        acc -= w * (f[y] - f[x]) * (dh_y - dh_x) / 2;
        acc -= w * (h[y] - h[x]) * (df_y - df_x) / 2;
    }
    return acc / (2 * mx);
}

}  // namespace curvachay
