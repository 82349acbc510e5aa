#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvachay/laplacian.hpp"
#include "curvachay/local_graph.hpp"
#include "curvachay/transport.hpp"

namespace curvachay {

/// Edge curvature through the Laplacian formulation:
///   kappa(x,y) = inf { Delta f(x) - Delta f(y) : f 1-Lipschitz, f(y)-f(x)=1 }
/// restricted to f on B1(x) u B1(y) with constraints |f(u)-f(v)| <= d(u,v)
/// from the exact distance table; any feasible local f extends 1-Lipschitz
/// to the whole graph, so the restriction is exact. Solved by exact
/// rational simplex.
struct EdgeCurvature {
    Rational value = 0;
    std::vector<int> support;       // vertex ids carrying the witness f
    std::vector<Rational> witness;  // optimal f, f(x) = 0, f(y) = 1
};

EdgeCurvature kappa_lly_laplacian(const LocalGraph& g, int x, int y, const LaplacianKind& kind);

/// {"value_rational": "p/q", "value_float": ..., "witness": {...}}
std::string edge_curvature_to_json(const EdgeCurvature& k);

}  // namespace curvachay
