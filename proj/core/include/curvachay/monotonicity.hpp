#pragma once

#include <string>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/presentation.hpp"
#include "curvachay/rational.hpp"
#include "curvachay/weights.hpp"

namespace curvachay {

/// Vertex-measure and edge-weight compatibility of a surjective map plus
/// the exact Laplacian intertwining identity Delta(f' o Phi)(x) =
/// (Delta' f')(Phi x) on random functions.
struct LipschitzReport {
    bool surjective = false;
    bool conditions_ok = false;                 // measure and weight-sum relations
    std::vector<std::string> violations;        // per vertex / edge findings
    bool intertwines = false;
    int samples = 0;
};

LipschitzReport lipschitz_quotient_check(const LocalGraph& g, const LocalGraph& g_prime,
                                         const std::vector<int>& phi, unsigned seed, int samples = 100);

/// Weighted-curvature comparison across an added-relator quotient with the
/// adapted weighting scheme. Curvatures use the weighted Laplacian with
/// m == 1.
struct MonotonicityReport {
    bool hypotheses_ok = false;
    std::vector<std::string> hypothesis_violations;

    double be_source = 0;
    double be_target = 0;
    bool be_monotone = false;

    struct EdgeComparison {
        int source_u = 0, source_v = 0;
        int target_u = 0, target_v = 0;
        Rational kappa_source;
        Rational kappa_target;
        bool ok = false;
    };
    std::vector<EdgeComparison> edges;
    bool or_monotone = false;

    bool passed() const { return hypotheses_ok && be_monotone && or_monotone; }
};

MonotonicityReport monotonicity_check(const Presentation& p, const Presentation& p_prime,
                                      const WeightingScheme& w0, int max_cosets, unsigned seed = 0x5eed);

/// Convenience: unit source weights.
MonotonicityReport monotonicity_check(const Presentation& p, const Presentation& p_prime, int max_cosets,
                                      unsigned seed = 0x5eed);

/// Opt-in variant for an infinite raach source: source curvatures come from
/// the closed forms (rescaled to the non-normalized Laplacian), the finite
/// target is built with adapted weights where every surviving class counts
/// its merged preimage letters.
struct RaachSourceMonotonicityReport {
    double be_source = 0;
    double be_target = 0;
    bool be_monotone = false;
    std::vector<std::pair<Rational, Rational>> kappa_pairs;  // (source, target) per class
    bool or_monotone = false;
    bool passed() const { return be_monotone && or_monotone; }
};
RaachSourceMonotonicityReport monotonicity_check_raach_source(const Presentation& p,
                                                              const Presentation& p_prime, int max_cosets);

}  // namespace curvachay
