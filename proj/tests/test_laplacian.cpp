#include "doctest.h"

#include <random>

#include "curvachay/ball.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/laplacian.hpp"
#include "curvachay/matrix.hpp"

using namespace curvachay;

namespace {

LocalGraph k2() {
    LocalGraph g;
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_edge(0, 1);
    return g;
}

LocalGraph star4() {
    LocalGraph g;
    g.add_vertex("c");
    for (int i = 0; i < 4; ++i) {
        g.add_vertex("n" + std::to_string(i));
        g.add_edge(0, i + 1);
    }
    return g;
}

// definitional route, used as the oracle for the closed-form gamma
Rational gamma_defn(const LocalGraph& g, const LaplacianKind& kind, const std::vector<Rational>& f,
                    const std::vector<Rational>& h, int x) {
    std::vector<Rational> fh(g.n());
    for (int v = 0; v < g.n(); ++v) fh[v] = f[v] * h[v];
    return (laplacian_apply(g, kind, fh, x) - f[x] * laplacian_apply(g, kind, h, x) -
            h[x] * laplacian_apply(g, kind, f, x)) /
           2;
}

}  // namespace

TEST_CASE("constant functions are harmonic") {
    LocalGraph g = star4();
    std::vector<Rational> f(g.n(), rat(7, 3));
    for (int v = 0; v < g.n(); ++v)
        CHECK(laplacian_apply(g, LaplacianKind::non_normalized(), f, v) == 0);
    CHECK(gamma(g, LaplacianKind::non_normalized(), f, 0) == 0);
}

TEST_CASE("two point difference on an edge") {
    LocalGraph g = k2();
    std::vector<Rational> f{0, 1};
    CHECK(laplacian_apply(g, LaplacianKind::non_normalized(), f, 0) == 1);
    CHECK(laplacian_apply(g, LaplacianKind::non_normalized(), f, 1) == -1);
}

TEST_CASE("normalized laplacian of a neighbour indicator at a 4-regular vertex") {
    LocalGraph g = star4();
    std::vector<Rational> f(g.n(), Rational(0));
    f[1] = 1;
    CHECK(laplacian_apply(g, LaplacianKind::normalized(), f, 0) == rat(1, 4));
}

TEST_CASE("gamma closed form equals the definitional composition") {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    LocalGraph g = ball(p, 3);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (const LaplacianKind& kind :
         {LaplacianKind::non_normalized(), LaplacianKind::normalized(), LaplacianKind::random_walk(rat(1, 3))}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> f(g.n()), h(g.n());
            for (auto& v : f) v = rat(num(rng), den(rng));
            for (auto& v : h) v = rat(num(rng), den(rng));
            CHECK(gamma(g, kind, f, h, g.root) == gamma_defn(g, kind, f, h, g.root));
            CHECK(gamma(g, kind, f, f, g.root) >= 0);
        }
    }
}

TEST_CASE("k2 gamma and gamma2 reproduce curvature two") {
    LocalGraph g = k2();
    std::vector<Rational> f{0, 1};
    LaplacianKind kind = LaplacianKind::non_normalized();
    CHECK(gamma(g, kind, f, 0) == rat(1, 2));
    CHECK(gamma2(g, kind, f, 0) == 1);
    CHECK(gamma2(g, kind, f, 0) / gamma(g, kind, f, 0) == 2);
}

TEST_CASE("laplacian matrix rows sum to zero for every kind") {
    Presentation p = parse_presentation("raach { a:2, b:4; }");
    LocalGraph g = ball(p, 2);
    g.measure(1) = rat(3, 2);  // exercise the weighted kind on uneven data
    for (const LaplacianKind& kind :
         {LaplacianKind::non_normalized(), LaplacianKind::normalized(), LaplacianKind::weighted(),
          LaplacianKind::random_walk(rat(1, 7))}) {
        RatMatrix l = laplacian_matrix(g, kind);
        for (const Rational& s : l.row_sums()) CHECK(s == 0);
    }
}

TEST_CASE("random walk kind keeps the laziness invariant") {
    LocalGraph g = star4();
    LaplacianKind kind = LaplacianKind::random_walk(rat(1, 4));
    for (int v = 0; v < g.n(); ++v)
        CHECK(vertex_measure(g, kind, v) >= g.weighted_degree(v));
    CHECK_THROWS_AS(LaplacianKind::random_walk(rat(3, 2)), InvalidInput);
}

TEST_CASE("insufficient radius is reported") {
    Presentation p = parse_presentation("raach { a:2, b:2; }");
    LocalGraph g = ball(p, 1);
    std::vector<Rational> f(g.n(), Rational(0));
    CHECK_THROWS_AS(gamma2(g, LaplacianKind::non_normalized(), f, g.root), InsufficientRadius);
    LocalGraph g2 = ball(p, 2);
    std::vector<Rational> f2(g2.n(), Rational(0));
    CHECK_THROWS_AS(laplacian_apply(g2, LaplacianKind::non_normalized(), f2, g2.n() - 1),
                    InsufficientRadius);
}
