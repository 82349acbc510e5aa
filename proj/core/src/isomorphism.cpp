#include "curvachay/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace curvachay {

namespace {

// Iterated colour refinement over both graphs with one shared palette:
// start from (dist-to-root, degree) and refine by multisets of (neighbour
// colour, edge weight) until stable. Isomorphic vertices must share a
// colour, so the search only tries same-colour pairs.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const LocalGraph& g1, const LocalGraph& g2,
                                                            bool respect_root, bool respect_weights) {
    std::vector<int> c1(g1.n()), c2(g2.n());
    {
        std::map<std::pair<int, int>, int> palette;
        auto assign = [&](const LocalGraph& g, std::vector<int>& color) {
            const auto& dist = g.dist_from_root();
            for (int v = 0; v < g.n(); ++v) {
                std::pair<int, int> key{respect_root ? dist[v] : 0, g.degree(v)};
                auto [it, _] = palette.try_emplace(key, static_cast<int>(palette.size()));
                color[v] = it->second;
            }
        };
        assign(g1, c1);
        assign(g2, c2);
    }
    while (true) {
        std::map<std::pair<int, std::vector<std::pair<int, std::string>>>, int> palette;
        auto signature = [&](const LocalGraph& g, const std::vector<int>& color, int v) {
            std::vector<std::pair<int, std::string>> sig;
            for (int u : g.neighbors(v))
                sig.emplace_back(color[u], respect_weights ? to_fraction_string(g.weight(v, u)) : "");
            std::sort(sig.begin(), sig.end());
            return std::pair<int, std::vector<std::pair<int, std::string>>>{color[v], std::move(sig)};
        };
        std::vector<int> n1(g1.n()), n2(g2.n());
        for (int v = 0; v < g1.n(); ++v) {
            auto [it, _] = palette.try_emplace(signature(g1, c1, v), static_cast<int>(palette.size()));
            n1[v] = it->second;
        }
        for (int v = 0; v < g2.n(); ++v) {
            auto [it, _] = palette.try_emplace(signature(g2, c2, v), static_cast<int>(palette.size()));
            n2[v] = it->second;
        }
        bool stable = true;
        for (int v = 0; v < g1.n(); ++v) stable = stable && n1[v] == c1[v];
        for (int v = 0; v < g2.n(); ++v) stable = stable && n2[v] == c2[v];
        c1 = std::move(n1);
        c2 = std::move(n2);
        if (stable) break;
    }
    return {std::move(c1), std::move(c2)};
}

struct Search {
    const LocalGraph& g1;
    const LocalGraph& g2;
    const IsomorphismOptions& opts;
    std::vector<int> color1, color2;
    std::vector<int> map;      // g1 vertex -> g2 vertex or -1
    std::vector<bool> used;    // g2 vertex taken

    bool compatible(int v1, int v2) const {
        if (color1[v1] != color2[v2]) return false;
        for (int u1 : g1.neighbors(v1)) {
            if (map[u1] < 0) continue;
            if (!g2.adjacent(v2, map[u1])) return false;
            if (opts.respect_weights && g2.weight(v2, map[u1]) != g1.weight(v1, u1)) return false;
        }
        // mapped neighbours of v2 must be matched by mapped neighbours of v1
        int mapped_deg1 = 0;
        for (int u1 : g1.neighbors(v1)) mapped_deg1 += map[u1] >= 0;
        int mapped_deg2 = 0;
        for (int u2 : g2.neighbors(v2)) {
            bool taken = used[u2];
            mapped_deg2 += taken;
        }
        return mapped_deg1 == mapped_deg2;
    }

    bool extend(std::size_t depth, const std::vector<int>& order) {
        if (depth == order.size()) return true;
        int v1 = order[depth];
        for (int v2 = 0; v2 < g2.n(); ++v2) {
            if (used[v2] || !compatible(v1, v2)) continue;
            map[v1] = v2;
            used[v2] = true;
            if (extend(depth + 1, order)) return true;
            map[v1] = -1;
            used[v2] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LocalGraph& g1, const LocalGraph& g2,
                                                 const IsomorphismOptions& opts) {
    if (g1.n() != g2.n() || g1.edges().size() != g2.edges().size()) return std::nullopt;

    Search s{g1, g2, opts, {}, {}, {}, {}};
    auto [c1, c2] = refine_colors(g1, g2, opts.respect_root, opts.respect_weights);
    s.color1 = std::move(c1);
    s.color2 = std::move(c2);

    // colour histograms must agree
    std::map<int, int> h1, h2;
    for (int c : s.color1) ++h1[c];
    for (int c : s.color2) ++h2[c];
    if (h1 != h2) return std::nullopt;

    s.map.assign(g1.n(), -1);
    s.used.assign(g2.n(), false);

    // match scarce colours first, walking outward from the root
    std::vector<int> order(g1.n());
    for (int v = 0; v < g1.n(); ++v) order[v] = v;
    const auto& dist = g1.dist_from_root();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (h1[s.color1[a]] != h1[s.color1[b]]) return h1[s.color1[a]] < h1[s.color1[b]];
        return dist[a] < dist[b];
    });

    if (opts.respect_root) {
        if (s.color1[g1.root] != s.color2[g2.root]) return std::nullopt;
        s.map[g1.root] = g2.root;
        s.used[g2.root] = true;
        order.erase(std::find(order.begin(), order.end(), g1.root));
        if (!s.extend(0, order)) return std::nullopt;
        std::vector<int> full = s.map;
        return full;
    }
    if (!s.extend(0, order)) return std::nullopt;
    return s.map;
}

bool is_isomorphism(const LocalGraph& g1, const LocalGraph& g2, const std::vector<int>& map,
                    const IsomorphismOptions& opts) {
    if (g1.n() != g2.n() || static_cast<int>(map.size()) != g1.n()) return false;
    std::vector<bool> hit(g2.n(), false);
    for (int v = 0; v < g1.n(); ++v) {
        if (map[v] < 0 || map[v] >= g2.n() || hit[map[v]]) return false;
        hit[map[v]] = true;
    }
    if (opts.respect_root && map[g1.root] != g2.root) return false;
    if (g1.edges().size() != g2.edges().size()) return false;
    for (const auto& e : g1.edges()) {
        if (!g2.adjacent(map[e.u], map[e.v])) return false;
        if (opts.respect_weights && g2.weight(map[e.u], map[e.v]) != e.w) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_weighted_isomorphism(const AssociatedPair& a, const AssociatedPair& b) {
    if (a.size() != b.size()) return std::nullopt;
    LocalGraph ga, gb;
    for (int i = 0; i < a.size(); ++i) ga.add_vertex(a.vertices[i].label);
    for (int i = 0; i < b.size(); ++i) gb.add_vertex(b.vertices[i].label);
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            if (a.weight[i][j] > 0) ga.add_edge(i, j, a.weight[i][j]);
            if (b.weight[i][j] > 0) gb.add_edge(i, j, b.weight[i][j]);
        }
    IsomorphismOptions opts;
    opts.respect_root = false;
    opts.respect_weights = true;
    return find_isomorphism(ga, gb, opts);
}

}  // namespace curvachay
