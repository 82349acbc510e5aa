#pragma once

#include <string>
#include <vector>

#include "curvachay/ball.hpp"
#include "curvachay/todd_coxeter.hpp"

namespace curvachay {

/// Total map from the vertices of a domain graph onto cosets of the
/// codomain table, realizing the canonical quotient map between
/// presentations with nested relator sets.
struct VertexMap {
    std::vector<int> image;   // domain vertex -> codomain coset
    bool surjective = false;
    bool lipschitz_verified = false;
};

/// Checks relators(p) are a subset of relators(p') as freely reduced words.
bool relators_contained(const Presentation& p, const Presentation& p_prime);

/// Shortest word reaching each coset from the identity coset (BFS through
/// the table, columns in letter order).
std::vector<Word> coset_words(const CosetTable& t);

/// Quotient map with a coset-table domain.
VertexMap quotient_map(const Presentation& p, const Presentation& p_prime,
                       const CosetTable& domain, const CosetTable& codomain);

/// Quotient map with a Cayley-ball domain (raach source).
VertexMap quotient_map(const Presentation& p, const Presentation& p_prime,
                       const BallWithElements& domain, const CosetTable& codomain);

}  // namespace curvachay
