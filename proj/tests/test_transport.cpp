#include "doctest.h"

#include <random>

#include "curvachay/ball.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/theorems.hpp"
#include "curvachay/transport.hpp"

using namespace curvachay;

namespace {

// exhaustive-check helper: dual feasibility and complementary slackness
void check_certificate(const Measure& mu1, const Measure& mu2, const DistanceTable& dist,
                       const TransportPlan& plan) {
    REQUIRE(plan.dual_value == plan.cost);
    for (std::size_t i = 0; i < mu1.size(); ++i)
        for (std::size_t j = 0; j < mu2.size(); ++j)
            CHECK(plan.phi[i] + plan.psi[j] <= dist.dist(mu1[i].first, mu2[j].first));
    for (const auto& [u, v, mass] : plan.moves) {
        CHECK(mass > 0);
        std::size_t i = 0, j = 0;
        while (mu1[i].first != u) ++i;
        while (mu2[j].first != v) ++j;
        CHECK(plan.phi[i] + plan.psi[j] == dist.dist(u, v));
    }
    // marginals match exactly
    for (std::size_t i = 0; i < mu1.size(); ++i) {
        Rational row = 0;
        for (const auto& [u, v, mass] : plan.moves)
            if (u == mu1[i].first) row += mass;
        CHECK(row == mu1[i].second);
    }
    for (std::size_t j = 0; j < mu2.size(); ++j) {
        Rational col = 0;
        for (const auto& [u, v, mass] : plan.moves)
            if (v == mu2[j].first) col += mass;
        CHECK(col == mu2[j].second);
    }
}

}  // namespace

TEST_CASE("equal measures transport for free") {
    Presentation p = parse_presentation("raach { a:2, b:2, c:2; }");
    LocalGraph g = ball(p, 4);
    DistanceTable dist = local_distances(g, g.root, g.neighbors(g.root).front());
    Measure mu = idle_ball_measure(g, g.root, rat(1, 4));
    auto [w1, plan] = wasserstein_w1(mu, mu, dist);
    CHECK(w1 == 0);
    check_certificate(mu, mu, dist, plan);
}

TEST_CASE("point masses cost their distance") {
    Presentation p = parse_presentation("raach { a:2, b:2, c:2; }");
    LocalGraph g = ball(p, 4);
    DistanceTable dist = local_distances(g, g.root, g.neighbors(g.root).front());
    int far = -1;
    const auto& dist_root = g.dist_from_root();
    for (int v : dist.support)
        if (dist_root[v] == 2) far = v;
    REQUIRE(far >= 0);
    Measure mu1{{g.root, Rational(1)}};
    Measure mu2{{far, Rational(1)}};
    auto [w1, plan] = wasserstein_w1(mu1, mu2, dist);
    CHECK(w1 == 2);
    check_certificate(mu1, mu2, dist, plan);
}

TEST_CASE("mass mismatch is rejected") {
    Presentation p = parse_presentation("raach { a:2, b:2; }");
    LocalGraph g = ball(p, 4);
    DistanceTable dist = local_distances(g, g.root, g.neighbors(g.root).front());
    Measure mu1{{g.root, rat(1, 2)}};
    Measure mu2{{g.root, Rational(1)}};
    CHECK_THROWS_AS(wasserstein_w1(mu1, mu2, dist), InvalidInput);
}

TEST_CASE("matched-star configurations cost (3l+n)/(D+1)") {
    for (auto [n, l, z] : std::vector<std::tuple<int, int, bool>>{
             {2, 0, false}, {1, 1, false}, {0, 2, false}, {1, 1, true}, {3, 2, true}}) {
        LocalGraph g = matched_star_witness_graph(n, l, z);
        int d = n + l + 1 + (z ? 1 : 0);
        Rational p(1, d + 1);
        DistanceTable dist = local_distances(g, 0, 1);
        auto [w1, plan] =
            wasserstein_w1(idle_ball_measure(g, 0, p), idle_ball_measure(g, 1, p), dist);
        CHECK(w1 == rat(3 * l + n, d + 1));
        check_certificate(idle_ball_measure(g, 0, p), idle_ball_measure(g, 1, p), dist, plan);
    }
}

TEST_CASE("edge kappa at the endpoints of the idleness range") {
    LocalGraph g;
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_edge(0, 1);
    CHECK(kappa_p(g, 0, 1, Rational(0)) == 0);
    CHECK(kappa_p(g, 0, 1, rat(1, 2)) == 1);
    CHECK(kappa_p(g, 0, 1, Rational(1)) == 0);
    CHECK(kappa_lly_transport(g, 0, 1) == 2);
}

TEST_CASE("kappa_p is concave piecewise linear with at most three parts") {
    for (const char* text : {"raach { a:2, b:3; commute (a,b); }", "raach { a:2, b:2, c:2; }",
                             "raach { a:4, b:2; }", "raach { a:inf, b:inf; commute (a,b); }"}) {
        Presentation p = parse_presentation(text);
        LocalGraph g = ball(p, 4);
        int y = g.neighbors(g.root).front();
        std::vector<Rational> values;
        for (int k = 0; k <= 8; ++k) values.push_back(kappa_p(g, g.root, y, rat(k, 8)));
        std::vector<Rational> slopes;
        for (int k = 0; k < 8; ++k) slopes.push_back(values[k + 1] - values[k]);
        int changes = 0;
        for (std::size_t k = 1; k < slopes.size(); ++k) {
            CHECK(slopes[k] <= slopes[k - 1]);  // concavity
            changes += slopes[k] != slopes[k - 1];
        }
        CHECK(changes <= 2);  // at most three linear parts
    }
}

TEST_CASE("tree and triangle-tree edges match their closed forms") {
    for (int d = 2; d <= 6; ++d) {
        std::string text = "raach { ";
        for (int i = 0; i < d; ++i) text += std::string(i ? ", " : "") + static_cast<char>('a' + i) + ":2";
        text += "; }";
        LocalGraph g = ball(parse_presentation(text), 4);
        CHECK(kappa_lly_transport(g, g.root, g.neighbors(g.root).front()) == rat(4, d) - 2);
    }
    LocalGraph tri = ball(parse_presentation("raach { a:3, b:3; }"), 4);
    CHECK(kappa_lly_transport(tri, tri.root, tri.neighbors(tri.root).front()) == rat(7, 4) - 2);
}

TEST_CASE("hypercube edges have curvature two over the dimension") {
    for (int d = 2; d <= 4; ++d) {
        std::string text = "raach { ";
        for (int i = 0; i < d; ++i) text += std::string(i ? ", " : "") + static_cast<char>('a' + i) + ":2";
        if (d > 1) {
            text += "; commute ";
            bool first = true;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    text += std::string(first ? "" : ", ") + "(" + static_cast<char>('a' + i) + "," +
                            static_cast<char>('a' + j) + ")";
                    first = false;
                }
        }
        text += "; }";
        LocalGraph g = ball(parse_presentation(text), 4);
        CHECK(kappa_lly_transport(g, g.root, g.neighbors(g.root).front()) == rat(2, d));
    }
}

TEST_CASE("duality holds on random measures") {
    Presentation p = parse_presentation("raach { a:2, b:3; }");
    LocalGraph g = ball(p, 4);
    std::mt19937 rng(17);
    DistanceTable dist = local_distances(g, g.root, g.neighbors(g.root).front());
    std::uniform_int_distribution<int> mass(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        Measure mu1, mu2;
        Rational t1 = 0, t2 = 0;
        for (int u : dist.support) {
            Rational m1(mass(rng)), m2(mass(rng));
            mu1.emplace_back(u, m1);
            mu2.emplace_back(u, m2);
            t1 += m1;
            t2 += m2;
        }
        for (auto& [v, m] : mu1) m /= t1;
        for (auto& [v, m] : mu2) m /= t2;
        auto [w1, plan] = wasserstein_w1(mu1, mu2, dist);
        check_certificate(mu1, mu2, dist, plan);
    }
}

TEST_CASE("ragged supports with uneven masses still certify optimality") {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    LocalGraph g = ball(p, 4);
    DistanceTable dist = local_distances(g, g.root, g.neighbors(g.root).front());
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> mass(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        Measure mu1, mu2;
        Rational t1 = 0, t2 = 0;
        for (int u : dist.support) {
            int m1 = mass(rng), m2 = mass(rng);
            if (m1 > 0) {
                mu1.emplace_back(u, Rational(m1));
                t1 += m1;
            }
            if (m2 > 0) {
                mu2.emplace_back(u, Rational(m2));
                t2 += m2;
            }
        }
        if (mu1.empty() || mu2.empty()) continue;
        for (auto& [v, m] : mu1) m /= t1;
        for (auto& [v, m] : mu2) m /= t2;
        auto [w1, plan] = wasserstein_w1(mu1, mu2, dist);
        check_certificate(mu1, mu2, dist, plan);
        CHECK(w1 >= 0);
    }
}
