#pragma once

#include <optional>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/matrix.hpp"
#include "curvachay/presentation.hpp"
#include "curvachay/rational.hpp"

namespace curvachay {

/// Weighted Laplacian matrix of the associated pair (H*, w) with m == 1,
/// vertices in associated-pair order.
RatMatrix associated_pair_laplacian(const AssociatedPair& ap);

/// Spectrum of -Laplacian, ascending; lambda2 is values[1].
struct SpectralSummary {
    std::vector<double> values;
    double lambda2() const { return values.size() > 1 ? values[1] : 0.0; }
};
SpectralSummary spectrum_of_associated_pair(const AssociatedPair& ap);

/// Closed-form edge curvature of the Cayley graph of a raach:
///   kappa(s) = (a + 2 deg_{H*}(s)) / D - 2
/// with weighted degree (weight-2 edges count twice), a = 3 for order-3
/// generators and 4 otherwise, D = |S*|. This is the simple-random-walk
/// normalization.
Rational thm_or_raach(const DefiningGraph& h, int sstar_index);

/// Closed-form curvature matrix at the identity (non-normalized Laplacian):
///   A(e) = (2-D) Id + J - L_{H*} + diag(1 x l, 0 x (D-l)) / 2
/// with the order-3 elements of S* listed first. When no generator has
/// order 3 and D >= 2, K(e) = 2 - D + lambda2(-L); when all do and D >= 4,
/// K(e) = 5/2 - D + lambda2(-L). Outside those cases no closed-form K is
/// claimed and `curvature` is the numeric minimum eigenvalue.
struct BeClosedForm {
    std::vector<int> sstar_order;  // permutation of associated-pair vertices, order-3 first
    RatMatrix a;                   // exact rational curvature matrix in that order
    double curvature = 0;          // lambda_min(a)
    std::optional<double> closed_form;  // set when one of the two cases applies
    double lambda2 = 0;
};
BeClosedForm thm_be_raach(const DefiningGraph& h);

/// Laplacian identity L_{H*} = 2 L_{S1(e)} + 2 L_{S1'(e)}: left side from
/// the associated pair, right side assembled from the radius-2 Cayley ball.
/// Exact rational matrix comparison.
bool lap_identity_check(const DefiningGraph& h);

/// lambda2(-L_{H*}) <= |S*| under the closed-form hypotheses; nullopt when
/// the hypotheses do not hold (check skipped).
std::optional<bool> lambda2_bound_check(const DefiningGraph& h);

/// Closed-form curvature of the two-sided star configuration: matched
/// private neighbours u_j ~ v_j (n pairs), far wings x_i, y_i (l each), an
/// optional common neighbour z.
Rational matched_star_curvature(int n, int l, bool with_z);

/// Witness graph realizing the configuration with its distance conditions;
/// root = x, the edge of interest is (0,1) = (x,y).
LocalGraph matched_star_witness_graph(int n, int l, bool with_z);

}  // namespace curvachay
