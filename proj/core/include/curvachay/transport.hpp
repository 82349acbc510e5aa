#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/rational.hpp"

namespace curvachay {

/// Sparse probability measure on graph vertices: (vertex, mass) with
/// positive rational masses.
using Measure = std::vector<std::pair<int, Rational>>;

/// Exact pairwise graph distances between the listed vertices. Requires
/// the 4-ball around x certified so that geodesics between vertices of
/// B1(x) u B1(y) cannot leave the graph (they stay within distance 4 of x).
struct DistanceTable {
    std::vector<int> support;               // vertex ids
    std::map<std::pair<int, int>, int> d;   // both orders present

    int dist(int u, int v) const;
};
DistanceTable local_distances(const LocalGraph& g, int x, int y);

/// Optimal transport certificate: a feasible plan, its cost, and a dual
/// potential pair with phi_i + psi_j <= d(i,j), tight on the plan support.
struct TransportPlan {
    Rational cost = 0;
    std::vector<std::tuple<int, int, Rational>> moves;  // (from, to, mass)
    std::vector<Rational> phi;  // per source support point
    std::vector<Rational> psi;  // per target support point
    Rational dual_value = 0;    // equals cost exactly
};

/// Exact Wasserstein-1 distance by successive shortest augmenting paths on
/// the bipartite support graph. Costs come from the distance table.
std::pair<Rational, TransportPlan> wasserstein_w1(const Measure& mu1, const Measure& mu2,
                                                  const DistanceTable& dist);

/// The 1-ball measure with idleness p at x.
Measure idle_ball_measure(const LocalGraph& g, int x, const Rational& p);

/// kappa_p(x,y) = 1 - W1(mu_x^p, mu_y^p) for an edge x ~ y, exact.
Rational kappa_p(const LocalGraph& g, int x, int y, const Rational& p);

/// kappa curvature of an edge through the transport route, evaluated at
/// p = 1/(max(deg x, deg y) + 1) where kappa_p is linear, so that
/// kappa = kappa_p / (1-p) exactly.
Rational kappa_lly_transport(const LocalGraph& g, int x, int y);

}  // namespace curvachay
