#include "curvachay/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "curvachay/ball.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/jacobi.hpp"

namespace curvachay {

RatMatrix associated_pair_laplacian(const AssociatedPair& ap) {
    const int n = ap.size();
    RatMatrix l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (ap.weight[i][j] > 0) {
                l.at(i, j) += ap.weight[i][j];
                l.at(i, i) -= ap.weight[i][j];
            }
        }
    return l;
}

SpectralSummary spectrum_of_associated_pair(const AssociatedPair& ap) {
    RatMatrix neg = associated_pair_laplacian(ap).scaled(-1);
    SpectralSummary s;
    s.values = jacobi_eigen(neg.to_double()).values;
    return s;
}

Rational thm_or_raach(const DefiningGraph& h, int sstar_index) {
    AssociatedPair ap = associated_pair(h);
    if (sstar_index < 0 || sstar_index >= ap.size())
        throw InvalidInput("generator index outside S*");
    const int d = ap.size();
    int base = ap.vertices[sstar_index].base;
    int a = h.orders[base] == GeneratorOrder::finite(3) ? 3 : 4;
    return rat(a + 2 * ap.weighted_degree(sstar_index), d) - 2;
}

BeClosedForm thm_be_raach(const DefiningGraph& h) {
    AssociatedPair ap = associated_pair(h);
    const int d = ap.size();

    BeClosedForm out;
    out.sstar_order.resize(d);
    std::iota(out.sstar_order.begin(), out.sstar_order.end(), 0);
    std::stable_sort(out.sstar_order.begin(), out.sstar_order.end(), [&](int i, int j) {
        bool ti = h.orders[ap.vertices[i].base] == GeneratorOrder::finite(3);
        bool tj = h.orders[ap.vertices[j].base] == GeneratorOrder::finite(3);
        return ti > tj;
    });
    int ell = 0;
    for (int i : out.sstar_order) ell += h.orders[ap.vertices[i].base] == GeneratorOrder::finite(3);

    RatMatrix lap = associated_pair_laplacian(ap);
    out.a = RatMatrix::all_ones(d);
    Rational half(1, 2);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out.a.at(i, j) -= lap.at(out.sstar_order[i], out.sstar_order[j]);
        out.a.at(i, i) += Rational(2 - d);
        if (i < ell) out.a.at(i, i) += half;
    }

    SpectralSummary spec = spectrum_of_associated_pair(ap);
    out.lambda2 = spec.lambda2();
    out.curvature = min_eigenvalue(out.a.to_double());
    if (ell == 0 && d >= 2)
        out.closed_form = 2.0 - d + out.lambda2;
    else if (ell == d && d >= 4)
        out.closed_form = 2.5 - d + out.lambda2;
    return out;
}

bool lap_identity_check(const DefiningGraph& h) {
    AssociatedPair ap = associated_pair(h);
    const int d = ap.size();
    Presentation p = presentation_from_graph(h);
    BallWithElements b = ball_with_elements(p, 2);
    const LocalGraph& g = b.graph;

    // vertex of the ball realizing each element of S*
    std::vector<int> at(d, -1);
    std::vector<Letter> letters = symmetrized_letters(h);
    for (int i = 0; i < d; ++i) {
        GroupElement el{{Syllable{ap.vertices[i].base, ap.vertices[i].sign}}};
        // canonical exponent for s^-1 of a finite-order generator
        if (ap.vertices[i].sign < 0 && !h.orders[ap.vertices[i].base].is_infinite())
            el.syllables[0].exp = h.orders[ap.vertices[i].base].value - 1;
        for (int v = 0; v < g.n(); ++v)
            if (b.elements[v] == el) at[i] = v;
        if (at[i] < 0) throw Error("generator missing from the 1-sphere");
    }

    // right side: 2 L_{S1} + 2 L_{S1'} from the ball, in S* order
    RatMatrix rhs(d, d);
    std::vector<int> dist = g.bfs_distances(g.root);
    std::vector<int> s2;
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] == 2) s2.push_back(v);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            Rational w = 0;
            if (g.adjacent(at[i], at[j])) w += 2;  // 2 L_{S1}
            for (int z : s2) {                     // 2 L_{S1'}
                if (!g.adjacent(at[i], z) || !g.adjacent(at[j], z)) continue;
                int indeg = 0;
                for (int k = 0; k < d; ++k) indeg += g.adjacent(at[k], z);
                w += rat(2, indeg);
            }
            rhs.at(i, j) += w;
            rhs.at(i, i) -= w;
        }
    return associated_pair_laplacian(ap) == rhs;
}

std::optional<bool> lambda2_bound_check(const DefiningGraph& h) {
    int order3 = 0;
    for (const auto& o : h.orders) order3 += o == GeneratorOrder::finite(3);
    AssociatedPair ap = associated_pair(h);
    const int d = ap.size();
    bool no_order3 = order3 == 0 && d >= 2;
    bool all_order3 = order3 == h.size() && h.size() > 0 && d >= 4;
    if (!no_order3 && !all_order3) return std::nullopt;
    SpectralSummary spec = spectrum_of_associated_pair(ap);
    return spec.lambda2() <= d + 1e-9;
}

Rational matched_star_curvature(int n, int l, bool with_z) {
    if (n + l < 1) throw InvalidInput("configuration needs at least one side vertex");
    if (with_z) return rat(3 - 2 * l, n + l + 2);
    return rat(2 - 2 * l, n + l + 1);
}

LocalGraph matched_star_witness_graph(int n, int l, bool with_z) {
    if (n + l < 1) throw InvalidInput("configuration needs at least one side vertex");
    LocalGraph g;
    int x = g.add_vertex("x");
    int y = g.add_vertex("y");
    g.add_edge(x, y);
    for (int i = 0; i < l; ++i) {
        int xi = g.add_vertex("x" + std::to_string(i + 1));
        g.add_edge(x, xi);
    }
    for (int i = 0; i < l; ++i) {
        int yi = g.add_vertex("y" + std::to_string(i + 1));
        g.add_edge(y, yi);
    }
    for (int j = 0; j < n; ++j) {
        int uj = g.add_vertex("u" + std::to_string(j + 1));
        int vj = g.add_vertex("v" + std::to_string(j + 1));
        g.add_edge(x, uj);
        g.add_edge(y, vj);
        g.add_edge(uj, vj);
    }
    if (with_z) {
        int z = g.add_vertex("z");
        g.add_edge(x, z);
        g.add_edge(y, z);
    }
    g.root = x;
    g.radius = LocalGraph::kWholeGraph;
    return g;
}

}  // namespace curvachay
