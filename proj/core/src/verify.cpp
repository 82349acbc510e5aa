#include "curvachay/verify.hpp"

#include <cmath>
#include <random>

#include "curvachay/curvature_matrix.hpp"
#include "curvachay/cycles.hpp"
#include "curvachay/elimination.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/isomorphism.hpp"
#include "curvachay/jacobi.hpp"
#include "curvachay/monotonicity.hpp"
#include "curvachay/ollivier.hpp"
#include "curvachay/presets.hpp"
#include "curvachay/theorems.hpp"
#include "curvachay/transport.hpp"

namespace curvachay {

std::vector<DefiningGraph> raach_family(int max_gens) {
    std::vector<DefiningGraph> family;
    const int order_values[4] = {2, 3, 4, 0};
    for (int n = 1; n <= max_gens; ++n) {
        const int pair_count = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        int order_tuples = 1;
        for (int i = 0; i < n; ++i) order_tuples *= 4;
        for (int ot = 0; ot < order_tuples; ++ot) {
            DefiningGraph base;
            int code = ot;
            for (int i = 0; i < n; ++i) {
                base.vertices.push_back(std::string(1, static_cast<char>('a' + i)));
                base.orders.push_back({order_values[code % 4]});
                code /= 4;
            }
            for (int mask = 0; mask < (1 << pair_count); ++mask) {
                DefiningGraph h = base;
                for (int b = 0; b < pair_count; ++b)
                    if (mask & (1 << b)) h.add_edge(pairs[b].first, pairs[b].second);
                family.push_back(std::move(h));
            }
        }
    }
    return family;
}

std::vector<int> sstar_ball_vertices(const DefiningGraph& h, const BallWithElements& b) {
    AssociatedPair ap = associated_pair(h);
    std::vector<int> at(ap.size(), -1);
    for (int i = 0; i < ap.size(); ++i) {
        GroupElement el{{Syllable{ap.vertices[i].base, ap.vertices[i].sign}}};
        if (ap.vertices[i].sign < 0 && !h.orders[ap.vertices[i].base].is_infinite())
            el.syllables[0].exp = h.orders[ap.vertices[i].base].value - 1;
        for (int v = 0; v < b.graph.n(); ++v)
            if (b.elements[v] == el) at[i] = v;
        if (at[i] < 0) throw Error("generator missing from the 1-sphere");
    }
    return at;
}

VerifyReport verify_or(int max_gens) {
    VerifyReport rep;
    for (const DefiningGraph& h : raach_family(max_gens)) {
        Presentation p = presentation_from_graph(h);
        std::string witness = to_text(p);
        BallWithElements b = ball_with_elements(p, 4);
        std::vector<int> at = sstar_ball_vertices(h, b);
        AssociatedPair ap = associated_pair(h);
        for (int i = 0; i < ap.size(); ++i) {
            Rational closed = thm_or_raach(h, i);
            Rational transport = kappa_lly_transport(b.graph, b.graph.root, at[i]);
            rep.add("or-closed-form-vs-transport", to_fraction_string(closed),
                    to_fraction_string(transport), closed == transport,
                    witness + " @ " + ap.vertices[i].label);
        }
    }
    return rep;
}

VerifyReport verify_be(int max_gens) {
    VerifyReport rep;
    for (const DefiningGraph& h : raach_family(max_gens)) {
        Presentation p = presentation_from_graph(h);
        std::string witness = to_text(p);
        BallWithElements b = ball_with_elements(p, 2);

        CurvatureMatrixResult cm = curvature_matrix(b.graph, b.graph.root, LaplacianKind::non_normalized());
        RatMatrix closed = curvature_matrix_closed_form(b.graph, b.graph.root);
        rep.add("be-schur-vs-closed-form", "schur", "closed", cm.a == closed, witness);

        // associated-pair matrix, mapped through the order-3-first layout
        BeClosedForm thm = thm_be_raach(h);
        std::vector<int> at = sstar_ball_vertices(h, b);
        const int d = static_cast<int>(thm.sstar_order.size());
        std::vector<int> pos_in_s1(b.graph.n(), -1);
        for (std::size_t k = 0; k < cm.s1.size(); ++k) pos_in_s1[cm.s1[k]] = static_cast<int>(k);
        bool entrywise = static_cast<int>(cm.s1.size()) == d;
        for (int i = 0; i < d && entrywise; ++i)
            for (int j = 0; j < d && entrywise; ++j) {
                int bi = pos_in_s1[at[thm.sstar_order[i]]];
                int bj = pos_in_s1[at[thm.sstar_order[j]]];
                entrywise = bi >= 0 && bj >= 0 && thm.a.at(i, j) == cm.a.at(bi, bj);
            }
        rep.add("be-matrix-vs-associated-pair", "ball", "pair-formula", entrywise, witness);

        if (thm.closed_form) {
            double diff = std::fabs(thm.curvature - *thm.closed_form);
            rep.add("be-curvature-closed-form", std::to_string(thm.curvature),
                    std::to_string(*thm.closed_form), diff <= 1e-8, witness);
        }

        rep.add("laplacian-identity", "pair", "ball", lap_identity_check(h), witness);

        if (auto bound = lambda2_bound_check(h))
            rep.add("lambda2-bound", std::to_string(thm.lambda2), std::to_string(d), *bound, witness);
    }
    return rep;
}

VerifyReport verify_cycles(int max_gens) {
    VerifyReport rep;
    for (const DefiningGraph& h : raach_family(max_gens)) {
        Presentation p = presentation_from_graph(h);
        CycleReport cycles = classify_short_cycles(p);
        rep.add("short-cycles-classified", std::to_string(cycles.cycles.size()) + " cycles",
                std::to_string(cycles.violations().size()) + " violations", cycles.all_classified(),
                to_text(p));
    }
    return rep;
}

namespace {

Word random_word(const DefiningGraph& h, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, h.size() - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    Word w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w.letters.push_back({gen_dist(rng), sign_dist(rng) ? 1 : -1});
    return w;
}

void verify_one_elimination(VerifyReport& rep, const DefiningGraph& h, const Elimination& elim,
                            const std::string& kind, int words_per_case, std::mt19937& rng) {
    Presentation p = presentation_from_graph(h);
    Presentation q = presentation_from_graph(elim.transformed);
    std::string witness = to_text(p) + " " + kind;

    // associated pairs: explicit correspondence and searched isomorphism
    AssociatedPair ap = associated_pair(h);
    AssociatedPair aq = associated_pair(elim.transformed);
    bool explicit_ok = ap.size() == aq.size();
    std::vector<int> corr(ap.size(), -1);
    for (int i = 0; i < ap.size() && explicit_ok; ++i) {
        const auto& v = ap.vertices[i];
        if (v.base == elim.old_generator)
            corr[i] = aq.find_vertex(v.sign > 0 ? elim.new_primed : elim.new_doubled, 1);
        else
            corr[i] = aq.find_vertex(elim.transformed.index_of(h.vertices[v.base]), v.sign);
        explicit_ok = corr[i] >= 0;
    }
    for (int i = 0; i < ap.size() && explicit_ok; ++i)
        for (int j = 0; j < ap.size() && explicit_ok; ++j)
            explicit_ok = ap.weight[i][j] == aq.weight[corr[i]][corr[j]];
    rep.add("elimination-pair-correspondence", "source", "transformed", explicit_ok, witness);
    rep.add("elimination-pair-isomorphic", "source", "transformed",
            find_weighted_isomorphism(ap, aq).has_value(), witness);

    // radius-2 balls: searched isomorphism and the word-map correspondence
    BallWithElements b1 = ball_with_elements(p, 2);
    BallWithElements b2 = ball_with_elements(q, 2);
    rep.add("elimination-ball-isomorphic", std::to_string(b1.graph.n()) + " vertices",
            std::to_string(b2.graph.n()) + " vertices",
            find_isomorphism(b1.graph, b2.graph).has_value(), witness);

    bool map_ok = b1.graph.n() == b2.graph.n();
    if (map_ok) {
        std::vector<int> vmap(b1.graph.n(), -1);
        for (int v = 0; v < b1.graph.n() && map_ok; ++v) {
            GroupElement image = normal_form(q, elim.forward(word_of(h, b1.elements[v])));
            for (int u = 0; u < b2.graph.n(); ++u)
                if (b2.elements[u] == image) vmap[v] = u;
            map_ok = vmap[v] >= 0;
        }
        map_ok = map_ok && is_isomorphism(b1.graph, b2.graph, vmap);
        rep.add("elimination-ball-word-map", "forward image", "isomorphism", map_ok, witness);
    } else {
        rep.add("elimination-ball-word-map", "sizes", "differ", false, witness);
    }

    int roundtrip_failures = 0;
    for (int trial = 0; trial < words_per_case; ++trial) {
        Word w = random_word(h, rng, 12);
        Word back = elim.backward(elim.forward(w));
        if (!(normal_form(p, back) == normal_form(p, w))) ++roundtrip_failures;
    }
    rep.add("elimination-roundtrip", std::to_string(words_per_case) + " words",
            std::to_string(roundtrip_failures) + " failures", roundtrip_failures == 0, witness);
}

}  // namespace

VerifyReport verify_eliminations(int max_gens, int words_per_case, unsigned seed) {
    VerifyReport rep;
    std::mt19937 rng(seed);
    for (const DefiningGraph& h : raach_family(max_gens)) {
        for (int g = 0; g < h.size(); ++g) {
            if (h.orders[g] == GeneratorOrder::finite(4)) {
                verify_one_elimination(rep, h, eliminate_r4(h, g), "order-4 @ " + h.vertices[g],
                                       words_per_case, rng);
                break;  // one elimination per source keeps the sweep bounded
            }
        }
        for (int g = 0; g < h.size(); ++g) {
            if (h.orders[g].is_infinite()) {
                verify_one_elimination(rep, h, eliminate_rinf(h, g), "order-inf @ " + h.vertices[g],
                                       words_per_case, rng);
                break;
            }
        }
    }
    return rep;
}

VerifyReport verify_monotonicity(int max_cosets, unsigned seed) {
    VerifyReport rep;
    for (const auto& [source, target] : builtin_monotonicity_pairs()) {
        Presentation p = parse_presentation(source);
        Presentation q = parse_presentation(target);
        MonotonicityReport mr = monotonicity_check(p, q, max_cosets, seed);
        std::string witness = source + " -> " + target;
        rep.add("monotonicity-hypotheses", "required", std::to_string(mr.hypothesis_violations.size()),
                mr.hypotheses_ok, witness);
        rep.add("monotonicity-be", std::to_string(mr.be_source), std::to_string(mr.be_target),
                mr.be_monotone, witness);
        rep.add("monotonicity-or", std::to_string(mr.edges.size()) + " edges", "compared",
                mr.or_monotone, witness);
    }

    // the motivating pair decreases without the adapted weights
    {
        Presentation p = parse_presentation(builtin_monotonicity_pairs().front().first);
        Presentation q = parse_presentation(builtin_monotonicity_pairs().front().second);
        LocalGraph g = cayley_from_cosets(todd_coxeter(p, max_cosets));
        LocalGraph gp = cayley_from_cosets(todd_coxeter(q, max_cosets));
        LaplacianKind kind = LaplacianKind::non_normalized();
        double k_source = bakry_emery(g, 0, kind).value;
        double k_target = bakry_emery(gp, 0, kind).value;
        Rational kappa_source = kappa_lly_laplacian(g, 0, g.neighbors(0).front(), kind).value;
        Rational kappa_target = kappa_lly_laplacian(gp, 0, gp.neighbors(0).front(), kind).value;
        bool decreases = k_target < k_source - 0.5 && kappa_target < kappa_source;
        rep.add("monotonicity-unweighted-counterexample",
                std::to_string(k_source) + ", " + to_fraction_string(kappa_source),
                std::to_string(k_target) + ", " + to_fraction_string(kappa_target), decreases,
                "unweighted quotient of the order-4 relator example");
    }
    return rep;
}

}  // namespace curvachay
