#include "curvachay/monotonicity.hpp"

#include <random>
#include <set>

#include "curvachay/ball.hpp"
#include "curvachay/curvature_matrix.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/laplacian.hpp"
#include "curvachay/ollivier.hpp"
#include "curvachay/quotient.hpp"
#include "curvachay/theorems.hpp"
#include "curvachay/todd_coxeter.hpp"

namespace curvachay {

LipschitzReport lipschitz_quotient_check(const LocalGraph& g, const LocalGraph& g_prime,
                                         const std::vector<int>& phi, unsigned seed, int samples) {
    if (static_cast<int>(phi.size()) != g.n()) throw InvalidInput("vertex map size mismatch");
    LipschitzReport rep;

    std::set<int> image(phi.begin(), phi.end());
    rep.surjective = static_cast<int>(image.size()) == g_prime.n();
    if (!rep.surjective) rep.violations.push_back("map is not surjective");

    rep.conditions_ok = rep.surjective;
    for (int x = 0; x < g.n(); ++x)
        if (g.measure(x) != g_prime.measure(phi[x])) {
            rep.conditions_ok = false;
            rep.violations.push_back("vertex measure mismatch at vertex " + std::to_string(x));
        }
    // preimage fibres per target vertex
    std::vector<std::vector<int>> fibre(g_prime.n());
    for (int x = 0; x < g.n(); ++x) fibre[phi[x]].push_back(x);
    for (const auto& e : g_prime.edges()) {
        for (auto [xp, yp] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int x : fibre[xp]) {
                Rational sum = 0;
                for (int y : fibre[yp])
                    if (g.adjacent(x, y)) sum += g.weight(x, y);
                if (sum != e.w) {
                    rep.conditions_ok = false;
                    rep.violations.push_back("edge weight sum mismatch at vertex " + std::to_string(x) +
                                             " over edge {" + std::to_string(e.u) + "," +
                                             std::to_string(e.v) + "}");
                }
            }
        }
    }

    // exact intertwining on random functions
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 8);
    LaplacianKind kind = LaplacianKind::weighted();
    rep.intertwines = true;
    rep.samples = samples;
    for (int trial = 0; trial < samples && rep.intertwines; ++trial) {
        std::vector<Rational> f_prime(g_prime.n());
        for (auto& v : f_prime) v = rat(num(rng), den(rng));
        std::vector<Rational> f(g.n());
        for (int x = 0; x < g.n(); ++x) f[x] = f_prime[phi[x]];
        for (int x = 0; x < g.n() && rep.intertwines; ++x) {
            Rational lhs = laplacian_apply(g, kind, f, x);
            Rational rhs = laplacian_apply(g_prime, kind, f_prime, phi[x]);
            if (lhs != rhs) {
                rep.intertwines = false;
                rep.violations.push_back("Laplacian identity fails at vertex " + std::to_string(x) +
                                         " on sample " + std::to_string(trial));
            }
        }
    }
    return rep;
}

MonotonicityReport monotonicity_check(const Presentation& p, const Presentation& p_prime,
                                      const WeightingScheme& w0, int max_cosets, unsigned seed) {
    CosetTable t = todd_coxeter(p, max_cosets);
    CosetTable t_prime = todd_coxeter(p_prime, max_cosets);
    AdaptedWeights aw = adapted_weights(p, p_prime, t, t_prime, w0);

    LocalGraph g = cayley_from_cosets(t, w0.class_weight);
    LocalGraph g_prime = cayley_from_cosets(t_prime, aw.scheme.class_weight);
    VertexMap vm = quotient_map(p, p_prime, t, t_prime);

    MonotonicityReport rep;
    LipschitzReport lr = lipschitz_quotient_check(g, g_prime, vm.image, seed);
    rep.hypotheses_ok = lr.surjective && lr.conditions_ok && lr.intertwines;
    rep.hypothesis_violations = lr.violations;

    LaplacianKind kind = LaplacianKind::weighted();
    rep.be_source = bakry_emery(g, 0, kind).value;
    rep.be_target = bakry_emery(g_prime, 0, kind).value;
    rep.be_monotone = rep.be_target >= rep.be_source - 1e-9;

    rep.or_monotone = true;
    for (const auto& e : g.edges()) {
        int up = vm.image[e.u], vp = vm.image[e.v];
        if (up == vp) continue;  // the edge collapses to a vertex
        MonotonicityReport::EdgeComparison cmp;
        cmp.source_u = e.u;
        cmp.source_v = e.v;
        cmp.target_u = up;
        cmp.target_v = vp;
        cmp.kappa_source = kappa_lly_laplacian(g, e.u, e.v, kind).value;
        cmp.kappa_target = kappa_lly_laplacian(g_prime, up, vp, kind).value;
        cmp.ok = cmp.kappa_target >= cmp.kappa_source;
        rep.or_monotone = rep.or_monotone && cmp.ok;
        rep.edges.push_back(std::move(cmp));
    }
    return rep;
}

MonotonicityReport monotonicity_check(const Presentation& p, const Presentation& p_prime, int max_cosets,
                                      unsigned seed) {
    CosetTable t = todd_coxeter(p, max_cosets);
    WeightingScheme w0 = WeightingScheme::unit(letter_classes(t));
    return monotonicity_check(p, p_prime, w0, max_cosets, seed);
}

RaachSourceMonotonicityReport monotonicity_check_raach_source(const Presentation& p,
                                                              const Presentation& p_prime,
                                                              int max_cosets) {
    if (!p.is_raach()) throw InvalidInput("source must be a raach presentation");
    if (p.alphabet != p_prime.alphabet) throw InvalidInput("alphabets must agree");
    if (!relators_contained(p, p_prime))
        throw InvalidInput("relators of the source are not contained in the target");
    const DefiningGraph& h = *p.defining_graph;
    AssociatedPair ap = associated_pair(h);
    const int d = ap.size();

    CosetTable t_prime = todd_coxeter(p_prime, max_cosets);
    LetterClasses lc_prime = letter_classes(t_prime);

    // source classes are the canonical letters of S*; their images are the
    // classes of the corresponding columns
    std::vector<Letter> letters = symmetrized_letters(h);
    std::vector<Rational> target_weight(lc_prime.num_classes(), Rational(0));
    std::vector<int> image(d, -1);
    for (int i = 0; i < d; ++i) {
        image[i] = lc_prime.class_of[CosetTable::column(letters[i].gen, letters[i].sign)];
        if (image[i] >= 0) target_weight[image[i]] += 1;
    }
    for (int c = 0; c < lc_prime.num_classes(); ++c)
        if (target_weight[c] == 0) throw Error("a surviving generator class has no preimage");

    LocalGraph g_prime = cayley_from_cosets(t_prime, target_weight);
    LaplacianKind kind = LaplacianKind::weighted();

    RaachSourceMonotonicityReport rep;
    rep.be_source = thm_be_raach(h).curvature;  // non-normalized
    rep.be_target = bakry_emery(g_prime, 0, kind).value;
    rep.be_monotone = rep.be_target >= rep.be_source - 1e-9;

    rep.or_monotone = true;
    for (int i = 0; i < d; ++i) {
        if (image[i] < 0) continue;  // the generator collapses in the quotient
        Rational source = thm_or_raach(h, i) * d;  // rescale to non-normalized
        int rep_letter = lc_prime.members[image[i]].front();
        int target_v = t_prime.act(0, rep_letter);
        Rational target = kappa_lly_laplacian(g_prime, 0, target_v, kind).value;
        rep.kappa_pairs.emplace_back(source, target);
        rep.or_monotone = rep.or_monotone && target >= source;
    }
    return rep;
}

}  // namespace curvachay
