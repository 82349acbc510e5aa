#include "curvachay/transport.hpp"

#include <algorithm>
#include <limits>

#include "curvachay/errors.hpp"

namespace curvachay {

int DistanceTable::dist(int u, int v) const {
    if (u == v) return 0;
    auto it = d.find({u, v});
    if (it == d.end()) throw InvalidInput("distance queried outside the table support");
    return it->second;
}

DistanceTable local_distances(const LocalGraph& g, int x, int y) {
    if (!g.adjacent(x, y)) throw InvalidInput("local distances expect an edge");
    // geodesics between the supports stay inside the 4-ball of either endpoint
    if (!g.certifies(x, 4) && !g.certifies(y, 4))
        throw InsufficientRadius("local distances require a certified 4-ball");

    DistanceTable table;
    table.support.push_back(x);
    table.support.push_back(y);
    for (int u : g.neighbors(x))
        if (u != y) table.support.push_back(u);
    for (int u : g.neighbors(y))
        if (u != x && std::find(table.support.begin(), table.support.end(), u) == table.support.end())
            table.support.push_back(u);

    for (int u : table.support) {
        std::vector<int> dist = g.bfs_distances(u);
        for (int v : table.support) {
            if (dist[v] < 0) throw Error("support vertex unreachable inside the ball");
            table.d[{u, v}] = dist[v];
        }
    }
    return table;
}

namespace {

struct Node {
    Rational remaining;
};

}  // namespace

std::pair<Rational, TransportPlan> wasserstein_w1(const Measure& mu1, const Measure& mu2,
                                                  const DistanceTable& dist) {
    Rational total1 = 0, total2 = 0;
    for (const auto& [v, m] : mu1) total1 += m;
    for (const auto& [v, m] : mu2) total2 += m;
    if (total1 != total2) throw InvalidInput("transport between measures of different total mass");

    const int ns = static_cast<int>(mu1.size());
    const int nt = static_cast<int>(mu2.size());
    std::vector<Rational> supply(ns), demand(nt);
    for (int i = 0; i < ns; ++i) supply[i] = mu1[i].second;
    for (int j = 0; j < nt; ++j) demand[j] = mu2[j].second;

    std::vector<std::vector<Rational>> cost(ns, std::vector<Rational>(nt));
    std::vector<std::vector<Rational>> flow(ns, std::vector<Rational>(nt, Rational(0)));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) cost[i][j] = dist.dist(mu1[i].first, mu2[j].first);

    // Successive shortest paths with Bellman-Ford on the residual network;
    // nodes 0..ns-1 are sources, ns..ns+nt-1 sinks.
    const int nn = ns + nt;
    auto augment = [&]() -> bool {
        std::vector<Rational> d(nn, Rational(0));
        std::vector<bool> reach(nn, false);
        std::vector<int> pred(nn, -1);
        for (int i = 0; i < ns; ++i)
            if (supply[i] > 0) {
                reach[i] = true;
                d[i] = 0;
            }
        if (std::none_of(reach.begin(), reach.end(), [](bool b) { return b; })) return false;
        for (int iter = 0; iter < nn; ++iter) {
            bool changed = false;
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < nt; ++j) {
                    // forward arc i -> j, unbounded
                    if (reach[i] && (!reach[ns + j] || d[ns + j] > d[i] + cost[i][j])) {
                        reach[ns + j] = true;
                        d[ns + j] = d[i] + cost[i][j];
                        pred[ns + j] = i;
                        changed = true;
                    }
                    // reverse arc j -> i when flow present
                    if (flow[i][j] > 0 && reach[ns + j] && (!reach[i] || d[i] > d[ns + j] - cost[i][j])) {
                        reach[i] = true;
                        d[i] = d[ns + j] - cost[i][j];
                        pred[i] = ns + j;
                        changed = true;
                    }
                }
            if (!changed) break;
        }
        int best = -1;
        for (int j = 0; j < nt; ++j)
            if (demand[j] > 0 && reach[ns + j] && (best < 0 || d[ns + j] < d[ns + best])) best = j;
        if (best < 0) throw Error("transport network disconnected");

        // bottleneck along the predecessor path
        Rational push = demand[best];
        int node = ns + best;
        while (true) {
            int p = pred[node];
            if (p < 0) {
                push = std::min(push, supply[node]);
                break;
            }
            // reverse arc p(=sink) -> node(source) is bounded by its flow
            if (node < ns) push = std::min(push, flow[node][p - ns]);
            node = p;
        }
        node = ns + best;
        while (true) {
            int p = pred[node];
            if (p < 0) {
                supply[node] -= push;
                break;
            }
            if (node >= ns)
                flow[p][node - ns] += push;  // forward arc p -> sink
            else
                flow[node][p - ns] -= push;  // reverse arc through source
            node = p;
        }
        demand[best] -= push;
        return true;
    };
    while (augment()) {
    }
    for (int j = 0; j < nt; ++j)
        if (demand[j] != 0) throw Error("transport failed to satisfy demand");

    TransportPlan plan;
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            if (flow[i][j] != 0) {
                plan.cost += flow[i][j] * cost[i][j];
                plan.moves.emplace_back(mu1[i].first, mu2[j].first, flow[i][j]);
            }

    // dual potentials from a final shortest-path pass treating every source
    // as origin; with all supply exhausted the residual network still yields
    // feasible potentials: phi_i = -d_i, psi_j = d_j satisfy
    // phi_i + psi_j <= cost_ij with equality on flow-carrying arcs.
    std::vector<Rational> d(nn, Rational(0));
    std::vector<bool> reach(nn, false);
    for (int i = 0; i < ns; ++i) {
        reach[i] = true;
        d[i] = 0;
    }
    for (int iter = 0; iter < nn; ++iter) {
        bool changed = false;
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nt; ++j) {
                if (reach[i] && (!reach[ns + j] || d[ns + j] > d[i] + cost[i][j])) {
                    reach[ns + j] = true;
                    d[ns + j] = d[i] + cost[i][j];
                    changed = true;
                }
                if (flow[i][j] > 0 && reach[ns + j] && (!reach[i] || d[i] > d[ns + j] - cost[i][j])) {
                    reach[i] = true;
                    d[i] = d[ns + j] - cost[i][j];
                    changed = true;
                }
            }
        if (!changed) break;
    }
    plan.phi.resize(ns);
    plan.psi.resize(nt);
    for (int i = 0; i < ns; ++i) plan.phi[i] = -d[i];
    for (int j = 0; j < nt; ++j) plan.psi[j] = d[ns + j];
    for (int i = 0; i < ns; ++i) plan.dual_value += plan.phi[i] * mu1[i].second;
    for (int j = 0; j < nt; ++j) plan.dual_value += plan.psi[j] * mu2[j].second;
    return {plan.cost, plan};
}

Measure idle_ball_measure(const LocalGraph& g, int x, const Rational& p) {
    if (p < 0 || p > 1) throw InvalidInput("idleness must lie in [0,1]");
    Measure mu;
    if (p > 0) mu.emplace_back(x, p);
    if (p < 1) {
        Rational rest = (Rational(1) - p) / Rational(g.degree(x));
        for (int y : g.neighbors(x)) mu.emplace_back(y, rest);
    }
    return mu;
}

Rational kappa_p(const LocalGraph& g, int x, int y, const Rational& p) {
    if (!g.adjacent(x, y)) throw InvalidInput("kappa_p expects an edge");
    DistanceTable dist = local_distances(g, x, y);
    auto [w1, plan] = wasserstein_w1(idle_ball_measure(g, x, p), idle_ball_measure(g, y, p), dist);
    return Rational(1) - w1;
}

Rational kappa_lly_transport(const LocalGraph& g, int x, int y) {
    Rational p(1, std::max(g.degree(x), g.degree(y)) + 1);
    return kappa_p(g, x, y, p) / (Rational(1) - p);
}

}  // namespace curvachay
