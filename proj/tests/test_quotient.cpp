#include "doctest.h"

#include "curvachay/errors.hpp"
#include "curvachay/quotient.hpp"

using namespace curvachay;

TEST_CASE("order-4 cyclic to order-2 cyclic pairs cosets two by two") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2>");
    Presentation q = parse_presentation("group <a,b | a^4, b^-1 a^2, a^2>");
    CosetTable tp = todd_coxeter(p, 64);
    CosetTable tq = todd_coxeter(q, 64);
    VertexMap vm = quotient_map(p, q, tp, tq);
    REQUIRE(vm.image.size() == 4);
    CHECK(vm.image[0] == 0);
    CHECK(vm.surjective);
    CHECK(vm.lipschitz_verified);
    // fibres have size two: elements e, a^2 over the identity
    int fibre0 = 0;
    for (int x : vm.image) fibre0 += x == 0;
    CHECK(fibre0 == 2);
    Word a2{{{0, 1}, {0, 1}}};
    CHECK(vm.image[tp.trace(0, a2)] == 0);
}

TEST_CASE("identical presentations give the identity map") {
    Presentation p = parse_presentation("group <a | a^5>");
    CosetTable t = todd_coxeter(p, 64);
    VertexMap vm = quotient_map(p, p, t, t);
    for (int i = 0; i < t.n(); ++i) CHECK(vm.image[i] == i);
    CHECK(vm.surjective);
}

TEST_CASE("free group ball maps onto the order-3 cyclic group by exponent") {
    Presentation p = parse_presentation("raach { a:inf; }");
    Presentation q = parse_presentation("group <a | a^3>");
    // same alphabet; relators of the free raach presentation are empty
    Presentation p_as_group;
    p_as_group.alphabet = p.alphabet;
    BallWithElements b = ball_with_elements(p, 3);
    CosetTable tq = todd_coxeter(q, 64);
    VertexMap vm = quotient_map(p, q, b, tq);
    CHECK(vm.surjective);
    CHECK(vm.lipschitz_verified);
    // oracle: exponent arithmetic, a^k lands on the coset of k mod 3
    Word a{{{0, 1}}};
    for (int v = 0; v < b.graph.n(); ++v) {
        long exp = b.elements[v].is_identity() ? 0 : b.elements[v].syllables[0].exp;
        int expected = tq.trace(0, Word{std::vector<Letter>(
                                     static_cast<std::size_t>(((exp % 3) + 3) % 3), Letter{0, 1})});
        CHECK(vm.image[v] == expected);
    }
}

TEST_CASE("mismatched alphabets and missing relators are rejected") {
    Presentation p = parse_presentation("group <a | a^4>");
    Presentation q = parse_presentation("group <b | b^2>");
    CosetTable tp = todd_coxeter(p, 64);
    CosetTable tq = todd_coxeter(q, 64);
    CHECK_THROWS_AS(quotient_map(p, q, tp, tq), InvalidInput);
    Presentation r = parse_presentation("group <a | a^2>");
    CosetTable tr = todd_coxeter(r, 64);
    CHECK_THROWS_AS(quotient_map(p, r, tp, tr), InvalidInput);  // a^4 not a relator of r
}
