#pragma once

#include <cstddef>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/normal_form.hpp"
#include "curvachay/presentation.hpp"

namespace curvachay {

struct BallOptions {
    int radius_cap = 5;
    std::size_t vertex_cap = 2'000'000;
};

/// The symmetrized letters S* in canonical order: declaration order, with
/// s^-1 directly after s; order-2 generators contribute a single letter.
std::vector<Letter> symmetrized_letters(const DefiningGraph& h);
std::string letter_name(const DefiningGraph& h, Letter l);

/// Ball of the Cayley graph around the identity: contains exactly the
/// vertices at distance <= radius, every edge with at least one endpoint
/// at distance < radius, generator labels on all directed edges, and
/// m == 1, w == 1. Vertex numbering is BFS order with ties broken by
/// normal-form order.
LocalGraph ball(const Presentation& p, int radius, const BallOptions& opts = {});

/// Ball plus the elements backing each vertex, for callers that need to
/// map vertices back to group elements.
struct BallWithElements {
    LocalGraph graph;
    std::vector<GroupElement> elements;
};
BallWithElements ball_with_elements(const Presentation& p, int radius, const BallOptions& opts = {});

}  // namespace curvachay
