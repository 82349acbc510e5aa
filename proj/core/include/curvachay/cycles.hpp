#pragma once

#include <string>
#include <vector>

#include "curvachay/presentation.hpp"

namespace curvachay {

/// One simple cycle through the identity, recorded by the generator letters
/// along its edges.
struct CycleThroughIdentity {
    std::vector<Letter> letters;  // letters.size() == cycle length
    bool classified = false;      // matches one of the admissible forms
    std::string form;             // "order-3 triangle", "order-4 square", ...
};

struct CycleReport {
    std::vector<CycleThroughIdentity> cycles;

    int count(int length) const;
    std::vector<const CycleThroughIdentity*> violations() const;
    bool all_classified() const { return violations().empty(); }
};

/// Enumerates every simple 3-, 4- and 5-cycle through the identity inside
/// the radius-3 ball and checks each against the admissible forms:
/// triangles come from order-3 generators only, squares from an order-4
/// generator or a commuting pair, pentagons from a commuting pair s, t with
/// ord(t) = 3 using exactly the letters {s^±1, t^±1}, closing letters of
/// equal value forcing order 3.
CycleReport classify_short_cycles(const Presentation& p);

}  // namespace curvachay
