#include "doctest.h"

#include "curvachay/cycles.hpp"

using namespace curvachay;

TEST_CASE("a single order-3 generator yields exactly one triangle") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:3; }"));
    CHECK(r.count(3) == 1);
    CHECK(r.count(4) == 0);
    CHECK(r.count(5) == 0);
    CHECK(r.all_classified());
    CHECK(r.cycles.front().form == "order-3 triangle");
}

TEST_CASE("a commuting pair of involutions yields exactly one square") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:2, b:2; commute (a,b); }"));
    CHECK(r.count(3) == 0);
    CHECK(r.count(4) == 1);
    CHECK(r.count(5) == 0);
    CHECK(r.all_classified());
    CHECK(r.cycles.front().form == "commuting square");
}

TEST_CASE("an order-4 generator yields its square") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:4; }"));
    CHECK(r.count(4) == 1);
    CHECK(r.all_classified());
    CHECK(r.cycles.front().form == "order-4 square");
}

TEST_CASE("commuting order-2 and order-3 generators yield classified pentagons") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:2, b:3; commute (a,b); }"));
    CHECK(r.all_classified());
    CHECK(r.count(3) == 1);  // the b-triangle
    CHECK(r.count(5) > 0);
    for (const auto& c : r.cycles)
        if (c.letters.size() == 5) {
            CHECK(c.form == "commuting order-3 pentagon");
            // the endpoint condition: equal first and last letters force order 3
            if (c.letters.front() == c.letters.back()) CHECK(c.letters.front().gen == 1);
        }
}

TEST_CASE("free products contribute no short cycles at all") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:2, b:2; }"));
    CHECK(r.cycles.empty());
    CycleReport r2 = classify_short_cycles(parse_presentation("raach { a:inf, b:inf; }"));
    CHECK(r2.cycles.empty());
}

TEST_CASE("the free abelian plane has only commuting squares") {
    CycleReport r = classify_short_cycles(parse_presentation("raach { a:inf, b:inf; commute (a,b); }"));
    CHECK(r.count(3) == 0);
    CHECK(r.count(4) == 4);  // one square per sign pattern of (a^±1, b^±1)
    CHECK(r.count(5) == 0);
    CHECK(r.all_classified());
}
