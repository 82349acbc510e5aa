#pragma once

#include <optional>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/presentation.hpp"

namespace curvachay {

struct IsomorphismOptions {
    bool respect_root = true;     // map root to root
    bool respect_weights = true;  // preserve edge weights exactly
};

/// Backtracking isomorphism search with iterated colour refinement seeded
/// by (distance to root, degree). Returns a vertex bijection g1 -> g2 or
/// nullopt.
std::optional<std::vector<int>> find_isomorphism(const LocalGraph& g1, const LocalGraph& g2,
                                                 const IsomorphismOptions& opts = {});

/// Checks that a given vertex map is a weight-preserving isomorphism.
bool is_isomorphism(const LocalGraph& g1, const LocalGraph& g2, const std::vector<int>& map,
                    const IsomorphismOptions& opts = {});

/// Isomorphism of associated pairs as weighted graphs.
std::optional<std::vector<int>> find_weighted_isomorphism(const AssociatedPair& a, const AssociatedPair& b);

}  // namespace curvachay
