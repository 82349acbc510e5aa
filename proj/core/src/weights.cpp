#include "curvachay/weights.hpp"

#include "curvachay/errors.hpp"
#include "curvachay/quotient.hpp"

namespace curvachay {

WeightingScheme WeightingScheme::unit(const LetterClasses& lc) {
    WeightingScheme w;
    w.class_weight.assign(lc.num_classes(), Rational(1));
    return w;
}

void WeightingScheme::validate(const LetterClasses& lc) const {
    if (static_cast<int>(class_weight.size()) != lc.num_classes())
        throw InvalidInput("weighting scheme size mismatch");
    for (int c = 0; c < lc.num_classes(); ++c) {
        if (class_weight[c] <= 0) throw InvalidInput("weighting scheme must be positive");
        if (class_weight[c] != class_weight[lc.inverse_class[c]])
            throw InvalidInput("weighting scheme must agree on inverse generators");
    }
}

AdaptedWeights adapted_weights(const Presentation& p, const Presentation& p_prime, const CosetTable& t,
                               const CosetTable& t_prime, const WeightingScheme& w0) {
    if (p.alphabet != p_prime.alphabet) throw InvalidInput("adapted weights require identical alphabets");
    if (!relators_contained(p, p_prime))
        throw InvalidInput("relators of the source are not contained in the target");

    LetterClasses lc = letter_classes(t);
    LetterClasses lc_prime = letter_classes(t_prime);
    w0.validate(lc);

    AdaptedWeights out;
    out.class_image.assign(lc.num_classes(), -1);
    for (int c = 0; c < lc.num_classes(); ++c) {
        int image = lc_prime.class_of[lc.members[c].front()];
        for (int letter : lc.members[c])
            if (lc_prime.class_of[letter] != image)
                throw Error("letters equal in the source differ in the quotient");
        out.class_image[c] = image;  // -1 when the class collapses
    }
    out.scheme.class_weight.assign(lc_prime.num_classes(), Rational(0));
    for (int c = 0; c < lc.num_classes(); ++c)
        if (out.class_image[c] >= 0) out.scheme.class_weight[out.class_image[c]] += w0.class_weight[c];
    for (int c = 0; c < lc_prime.num_classes(); ++c)
        if (out.scheme.class_weight[c] == 0)
            throw Error("a surviving generator class has no preimage");
    out.scheme.validate(lc_prime);
    return out;
}

}  // namespace curvachay
