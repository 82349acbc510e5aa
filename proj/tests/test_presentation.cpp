#include "doctest.h"

#include "curvachay/errors.hpp"
#include "curvachay/presentation.hpp"
#include "curvachay/verify.hpp"

using namespace curvachay;

TEST_CASE("raach declaration parses into a defining graph") {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    REQUIRE(p.is_raach());
    const DefiningGraph& h = *p.defining_graph;
    CHECK(h.vertices == std::vector<std::string>{"a", "b"});
    CHECK(h.orders[0] == GeneratorOrder::finite(2));
    CHECK(h.orders[1] == GeneratorOrder::finite(3));
    CHECK(h.adjacent(0, 1));
    // materialized relators: a^2, b^3, [a,b]
    CHECK(p.relators.size() == 3);
}

TEST_CASE("group declaration parses relator words") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2>");
    CHECK_FALSE(p.is_raach());
    CHECK(p.alphabet == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0].letters == std::vector<Letter>{{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    CHECK(p.relators[1].letters == std::vector<Letter>{{1, -1}, {0, 1}, {0, 1}});
}

TEST_CASE("parse errors carry positions and reasons") {
    CHECK_THROWS_AS(parse_presentation("raach { a:5; }"), ParseError);
    CHECK_THROWS_AS(parse_presentation("raach { a:2, a:3; }"), ParseError);
    CHECK_THROWS_AS(parse_presentation("raach { a:2; commute (a,c); }"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group <a | b>"), ParseError);
    CHECK_THROWS_AS(parse_presentation("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group <a | a^2> trailing"), ParseError);
    try {
        parse_presentation("raach { a:5; }");
    } catch (const ParseError& e) {
        CHECK(e.position == 10);
    }
}

TEST_CASE("relators are freely reduced at parse time") {
    Presentation p = parse_presentation("group <a,b | a b b^-1 a>");
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].letters == std::vector<Letter>{{0, 1}, {0, 1}});
}

TEST_CASE("associated pair of a single order-3 generator") {
    Presentation p = parse_presentation("raach { a:3; }");
    AssociatedPair ap = associated_pair(*p.defining_graph);
    REQUIRE(ap.size() == 2);
    CHECK(ap.vertices[0].label == "a");
    CHECK(ap.vertices[1].label == "a^-1");
    CHECK(ap.weight[0][1] == 2);
    CHECK(ap.weighted_degree(0) == 2);
}

TEST_CASE("associated pair of a complete order-2 graph is the graph itself") {
    Presentation p = parse_presentation("raach { a:2, b:2, c:2; commute (a,b), (a,c), (b,c); }");
    AssociatedPair ap = associated_pair(*p.defining_graph);
    REQUIRE(ap.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(ap.vertices[i].label == p.alphabet[i]);
        for (int j = 0; j < 3; ++j) CHECK(ap.weight[i][j] == (i == j ? 0 : 1));
    }
}

TEST_CASE("associated pair of one free commuting edge is a 4-cycle") {
    Presentation p = parse_presentation("raach { a:inf, b:inf; commute (a,b); }");
    AssociatedPair ap = associated_pair(*p.defining_graph);
    REQUIRE(ap.size() == 4);
    // expected table evaluated case by case from the weight definition
    auto expect = [&](int i, int j) {
        const auto &u = ap.vertices[i], &v = ap.vertices[j];
        if (i == j) return 0;
        if (u.base == v.base) return 0;  // order-infinity pair s, s^-1
        return 1;                        // distinct commuting bases
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ap.weight[i][j] == expect(i, j));
    CHECK(ap.weighted_degree(0) == 2);  // a -- b, a -- b^-1
}

TEST_CASE("sphere size identity over the whole small family") {
    for (const DefiningGraph& h : raach_family(3)) {
        int involutions = 0;
        for (const auto& o : h.orders) involutions += o == GeneratorOrder::finite(2);
        AssociatedPair ap = associated_pair(h);
        CHECK(ap.size() == involutions + 2 * (h.size() - involutions));
        for (int i = 0; i < ap.size(); ++i) {
            CHECK(ap.weight[i][i] == 0);
            for (int j = 0; j < ap.size(); ++j) {
                CHECK(ap.weight[i][j] == ap.weight[j][i]);
                CHECK(ap.weight[i][j] >= 0);
                CHECK(ap.weight[i][j] <= 2);
            }
        }
    }
}

TEST_CASE("product of defining graphs joins everything across") {
    DefiningGraph k1;
    k1.vertices = {"a"};
    k1.orders = {GeneratorOrder::finite(2)};
    DefiningGraph prod = raach_product(k1, k1);
    CHECK(prod.size() == 2);
    CHECK(prod.vertices[1] == "a_2");  // renamed on collision
    CHECK(prod.adjacent(0, 1));
    CHECK(prod.orders[1] == GeneratorOrder::finite(2));

    DefiningGraph two;
    two.vertices = {"x", "y"};
    two.orders = {GeneratorOrder::infinite(), GeneratorOrder::finite(3)};
    DefiningGraph p2 = raach_product(two, k1);
    CHECK(p2.size() == 3);
    CHECK(p2.edges.size() == 2);  // cross edges only

    DefiningGraph empty;
    CHECK(raach_product(two, empty) == two);
}

TEST_CASE("parse serialize parse round-trips") {
    for (const char* text : {"raach { a:2, b:3; commute (a,b); }", "group <a,b | a^4, b^-1 a^2>",
                             "raach { x:inf, y:4, z:2; commute (x,z); }"}) {
        Presentation p = parse_presentation(text);
        CHECK(parse_presentation(to_text(p)) == p);
    }
    for (const DefiningGraph& h : raach_family(2)) {
        Presentation p = presentation_from_graph(h);
        CHECK(parse_presentation(to_text(p)) == p);
    }
}

TEST_CASE("json serialization is stable") {
    Presentation p = parse_presentation("raach { a:2, b:3; commute (a,b); }");
    std::string j = presentation_to_json(p);
    CHECK(j == presentation_to_json(p));
    CHECK(j.find("\"kind\":\"raach\"") != std::string::npos);
    CHECK(associated_pair_to_json(associated_pair(*p.defining_graph)).find("b^-1") != std::string::npos);
}
