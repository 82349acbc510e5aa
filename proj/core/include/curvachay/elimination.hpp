#pragma once

#include <string>

#include "curvachay/presentation.hpp"

namespace curvachay {

/// Result of replacing one order-4 or order-infinity generator s0 by a pair
/// of order-2 generators s0', s0''. The word maps realize the Cayley graph
/// isomorphism on spellings: `forward` rewrites words over the old alphabet
/// into words over the new one, `backward` inverts it on group elements.
struct Elimination {
    DefiningGraph transformed;
    int old_generator = 0;      // index of s0 in the source graph
    int new_primed = 0;         // index of s0' in the transformed graph
    int new_doubled = 0;        // index of s0''

    Word forward(const Word& w) const;
    Word backward(const Word& w) const;

    bool order_four = false;    // true for the order-4 rewrite

  private:
    friend Elimination eliminate_r4(const DefiningGraph&, int);
    friend Elimination eliminate_rinf(const DefiningGraph&, int);
    DefiningGraph source_;
};

/// Order-4 elimination: s0 becomes a commuting pair of involutions; the
/// forward map expands every power of s0 into positive letters mod 4 and
/// replaces the occurrences alternately by s0', s0'' starting from s0'.
Elimination eliminate_r4(const DefiningGraph& h, int s0);

/// Order-infinity elimination: s0 becomes a non-commuting pair of
/// involutions; the forward map tracks the sign of consecutive occurrences
/// (equal signs alternate the replacement letter, opposite signs repeat it).
Elimination eliminate_rinf(const DefiningGraph& h, int s0);

}  // namespace curvachay
