#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvachay/presentation.hpp"

namespace curvachay {

/// A maximal power of one generator inside a normal form. The exponent is
/// the canonical representative mod the generator order: {1} for order 2,
/// {1,2} for order 3, {1,2,3} for order 4, any nonzero integer for order
/// infinity.
struct Syllable {
    int gen = 0;
    long exp = 1;

    bool operator==(const Syllable&) const = default;
};

/// Canonical normal form of a group element: syllables are merged whenever
/// commutation moves allow, exponents are reduced, and the sequence is the
/// lexicographically least among all shuffle-equivalent orders (generator
/// indices compared in declaration order).
struct GroupElement {
    std::vector<Syllable> syllables;

    bool is_identity() const { return syllables.empty(); }
    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& other) const;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const;
};

/// Number of letters of the shortest spelling of a syllable: order-3
/// exponent 2 is one letter (s^-1), order-4 exponent 2 is two letters,
/// exponent 3 is one letter (s^-1).
long syllable_letter_count(const DefiningGraph& h, const Syllable& s);

long word_length(const DefiningGraph& h, const GroupElement& g);

/// Canonical normal form of a word in a raach presentation. Two words map
/// to equal GroupElements iff they represent the same group element.
GroupElement normal_form(const Presentation& p, const Word& w);

/// Normal form of g * l for a single symmetrized generator l.
GroupElement multiply(const Presentation& p, const GroupElement& g, Letter l);

GroupElement group_inverse(const Presentation& p, const GroupElement& g);

/// Shortest word spelling the element (syllables expanded via their
/// minimal-letter representatives).
Word word_of(const DefiningGraph& h, const GroupElement& g);

std::string element_to_string(const Presentation& p, const GroupElement& g);

}  // namespace curvachay
