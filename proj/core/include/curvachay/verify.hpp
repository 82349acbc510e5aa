#pragma once

#include <string>
#include <vector>

#include "curvachay/ball.hpp"
#include "curvachay/presentation.hpp"
#include "curvachay/report.hpp"

namespace curvachay {

/// All defining graphs on up to max_gens generators: every order assignment
/// in {2,3,4,inf} and every commutation edge subset. Deterministic order.
std::vector<DefiningGraph> raach_family(int max_gens);

/// Ball vertex realizing each element of S*, in associated-pair order.
std::vector<int> sstar_ball_vertices(const DefiningGraph& h, const BallWithElements& b);

/// Closed-form edge curvature against the exact transport computation on a
/// radius-4 ball, for every generator of every family member.
VerifyReport verify_or(int max_gens);

/// Curvature-matrix checks on radius-2 balls: Schur construction vs the
/// unit-weight closed form (exact, entrywise), vs the associated-pair
/// matrix (exact, entrywise up to the order-3-first permutation), the
/// two closed-form curvature cases (1e-8), the Laplacian identity of the
/// associated pair, and the lambda2 bound where its hypotheses hold.
VerifyReport verify_be(int max_gens);

/// Short-cycle classification over the family.
VerifyReport verify_cycles(int max_gens);

/// Order-4 / order-infinity generator elimination: associated pairs
/// isomorphic (searched and via the explicit correspondence), radius-2
/// balls isomorphic (searched and via the word map), and word-map
/// round-trips on random words.
VerifyReport verify_eliminations(int max_gens, int words_per_case, unsigned seed);

/// Weighted curvature monotonicity across the builtin quotient pairs plus
/// the unweighted decrease of the motivating pair.
VerifyReport verify_monotonicity(int max_cosets, unsigned seed);

}  // namespace curvachay
