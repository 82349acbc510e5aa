#pragma once

#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/rational.hpp"

namespace curvachay {

/// Choice of Laplacian: Delta f(x) = (1/m(x)) sum_y w(x,y) (f(y) - f(x)).
///   non_normalized: m == 1, w == 1
///   normalized:     m(x) = deg(x), w == 1
///   weighted:       the graph's stored m and w
///   random_walk(p): m(x) = deg(x)/(1-p), w == 1 (laziness p at each vertex)
struct LaplacianKind {
    enum class Type { non_normalized, normalized, weighted, random_walk };
    Type type = Type::non_normalized;
    Rational idleness = 0;  // p for random_walk, must satisfy 0 <= p < 1

    static LaplacianKind non_normalized() { return {Type::non_normalized, 0}; }
    static LaplacianKind normalized() { return {Type::normalized, 0}; }
    static LaplacianKind weighted() { return {Type::weighted, 0}; }
    static LaplacianKind random_walk(Rational p);
};

/// Effective vertex measure and edge weight under the chosen kind.
Rational vertex_measure(const LocalGraph& g, const LaplacianKind& kind, int x);
Rational edge_weight(const LocalGraph& g, const LaplacianKind& kind, int u, int v);

/// Exact Delta f(x); requires all neighbours of x present (x strictly
/// inside the certified ball).
Rational laplacian_apply(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                         int x);

/// Laplacian as a matrix over all vertices (rows indexed like columns by
/// vertex id); row sums are exactly zero.
class RatMatrix;
RatMatrix laplacian_matrix(const LocalGraph& g, const LaplacianKind& kind);

/// Gamma(f,h)(x) = (Delta(fh) - f Delta h - h Delta f)(x) / 2.
Rational gamma(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
               const std::vector<Rational>& h, int x);

/// Gamma2(f,h)(x) = (Delta Gamma(f,h) - Gamma(f, Delta h) - Gamma(h, Delta f))(x) / 2.
/// Needs the 2-ball around x certified.
Rational gamma2(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                const std::vector<Rational>& h, int x);

inline Rational gamma(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                      int x) {
    return gamma(g, kind, f, f, x);
}
inline Rational gamma2(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                       int x) {
    return gamma2(g, kind, f, f, x);
}

}  // namespace curvachay
