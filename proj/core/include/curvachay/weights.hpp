#pragma once

#include <vector>

#include "curvachay/presentation.hpp"
#include "curvachay/rational.hpp"
#include "curvachay/todd_coxeter.hpp"

namespace curvachay {

/// Left-invariant edge weighting of a Cayley graph: one positive weight per
/// generator class, equal on mutually inverse classes; vertex measure 1.
struct WeightingScheme {
    std::vector<Rational> class_weight;

    static WeightingScheme unit(const LetterClasses& lc);
    void validate(const LetterClasses& lc) const;
};

/// Transport of a weighting scheme through added relators: classes of the
/// source that merge into one target class have their weights summed;
/// collapsed classes are dropped.
struct AdaptedWeights {
    WeightingScheme scheme;         // on the codomain letter classes
    std::vector<int> class_image;   // domain class -> codomain class, -1 when collapsed
};

AdaptedWeights adapted_weights(const Presentation& p, const Presentation& p_prime, const CosetTable& t,
                               const CosetTable& t_prime, const WeightingScheme& w0);

}  // namespace curvachay
