#pragma once

#include <optional>
#include <vector>

#include "curvachay/laplacian.hpp"
#include "curvachay/local_graph.hpp"
#include "curvachay/matrix.hpp"

namespace curvachay {

/// Curvature matrix data at a vertex. The quadratic forms are expressed
/// over function values on S1(x) u S2(x) with f(x) = 0, entries obtained by
/// evaluating the bilinear Gamma2 on indicator pairs. `q` is the Schur
/// complement of the S2 block. When the sphere weights and the vertex
/// measure are trivial, `a = 2 q` is the exact rational curvature matrix;
/// otherwise eigenvalues come from the symmetric float matrix
/// 2 m(x) D^-1 q D^-1 with D = diag(sqrt(w(x,y_i))).
struct CurvatureMatrixResult {
    std::vector<int> s1;  // vertex ids of the 1-sphere, adjacency order
    std::vector<int> s2;  // vertex ids of the 2-sphere
    RatMatrix gamma2_form;  // (|s1|+|s2|)^2, ordered s1 then s2
    RatMatrix q;            // Schur complement, |s1|^2
    std::vector<Rational> sphere_weights;  // w(x, y_i) under the kind
    Rational measure_x;                    // m(x) under the kind
    bool exact = false;                    // a is the exact curvature matrix
    RatMatrix a;                           // set when exact

    std::vector<std::vector<double>> a_float() const;
};

CurvatureMatrixResult curvature_matrix(const LocalGraph& g, int x, const LaplacianKind& kind);

/// Non-normalized unit-weight closed form:
///   A(x) = -2 L_{S1} - 2 L_{S1'} + J + (3-D)/2 Id - diag(d+)/2
/// where L_{S1} is the Laplacian of the subgraph induced on the 1-sphere,
/// L_{S1'} carries weights w_ij = sum_z w_{y_i z} w_{y_j z} / indeg(z) over
/// the 2-sphere, and d+_i counts the neighbours of y_i in the 2-sphere.
/// Returns the matrix in the same S1 order as curvature_matrix.
RatMatrix curvature_matrix_closed_form(const LocalGraph& g, int x);

struct BakryEmeryOptions {
    double jacobi_tol = 1e-12;
    int soundness_samples = 100;   // random functions in the definitional check
    double soundness_slack = 1e-9;
    unsigned seed = 0x5eed;
};

/// Bakry-Emery curvature K(x) = lambda_min(A(x)) with eigenvector witness.
/// The result is checked against the definitional inequality
/// Gamma2 f - K Gamma f >= -slack on the witness and on random functions.
struct CurvatureValue {
    double value = 0;
    std::optional<Rational> exact;        // available for 1x1 matrices
    std::vector<double> eigenvector;      // over s1
    std::vector<double> witness_f;        // over s1 then s2, f(x) = 0
    std::vector<int> s1, s2;
    double witness_gap = 0;               // Gamma2(f) - K Gamma(f) at the witness
};

CurvatureValue bakry_emery(const LocalGraph& g, int x, const LaplacianKind& kind,
                           const BakryEmeryOptions& opts = {});

/// {"value_rational": "p/q" | null, "value_float": ..., "witness": {...}}
std::string curvature_value_to_json(const CurvatureValue& k);

}  // namespace curvachay
