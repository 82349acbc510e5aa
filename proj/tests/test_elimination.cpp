#include "doctest.h"

#include <random>

#include "curvachay/ball.hpp"
#include "curvachay/elimination.hpp"
#include "curvachay/errors.hpp"
#include "curvachay/isomorphism.hpp"
#include "curvachay/normal_form.hpp"

using namespace curvachay;

namespace {

DefiningGraph three_gen_graph(int order_s0) {
    // s0 with the order under test, s1 and s2 free
    DefiningGraph h;
    h.vertices = {"s0", "s1", "s2"};
    h.orders = {order_s0 == 0 ? GeneratorOrder::infinite() : GeneratorOrder::finite(order_s0),
                GeneratorOrder::infinite(), GeneratorOrder::infinite()};
    return h;
}

Word w(std::initializer_list<Letter> ls) { return Word{std::vector<Letter>(ls)}; }

}  // namespace

TEST_CASE("order-4 replacement rewrites the sample word") {
    DefiningGraph h = three_gen_graph(4);
    Elimination e = eliminate_r4(h, 0);
    CHECK(e.transformed.vertices == std::vector<std::string>{"s1", "s2", "s0'", "s0''"});
    CHECK(e.transformed.orders[2] == GeneratorOrder::finite(2));
    CHECK(e.transformed.adjacent(2, 3));  // the fresh pair commutes

    // s0^-1 s1 s0^2 s2^-1 s0  ->  s0' s0'' s0' s1 s0'' s0' s2^-1 s0''
    Word input = w({{0, -1}, {1, 1}, {0, 1}, {0, 1}, {2, -1}, {0, 1}});
    Word expected = w({{2, 1}, {3, 1}, {2, 1}, {0, 1}, {3, 1}, {2, 1}, {1, -1}, {3, 1}});
    CHECK(e.forward(input) == expected);
}

TEST_CASE("order-4 inverse map follows the alternation rule") {
    DefiningGraph h;
    h.vertices = {"s0", "s1", "s2", "s3"};
    h.orders = {GeneratorOrder::finite(4), GeneratorOrder::infinite(), GeneratorOrder::infinite(),
                GeneratorOrder::infinite()};
    Elimination e = eliminate_r4(h, 0);
    // transformed alphabet: s1 s2 s3 s0' s0''
    int sp = 3, spp = 4;
    // s1 (s0')^-1 s2 (s0'')^2 s0' s1 s0'' s0' s3 s0'
    Word input = w({{0, 1}, {sp, -1}, {1, 1}, {spp, 1}, {spp, 1}, {sp, 1}, {0, 1}, {spp, 1},
                    {sp, 1}, {2, 1}, {sp, 1}});
    // s1 s0 s2 s0^-1 s1 s0^-1 s0^-1 s3 s0
    Word expected = w({{1, 1}, {0, 1}, {2, 1}, {0, -1}, {1, 1}, {0, -1}, {0, -1}, {3, 1}, {0, 1}});
    CHECK(e.backward(input) == expected);
}

TEST_CASE("order-infinity replacement tracks signs on the sample word") {
    DefiningGraph h = three_gen_graph(0);
    Elimination e = eliminate_rinf(h, 0);
    CHECK_FALSE(e.transformed.adjacent(2, 3));  // the fresh pair does not commute

    // s0^-2 s1 s0^2 s2 s0  ->  s0'' s0' s1 s0' s0'' s2 s0'
    Word input = w({{0, -1}, {0, -1}, {1, 1}, {0, 1}, {0, 1}, {2, 1}, {0, 1}});
    Word expected = w({{3, 1}, {2, 1}, {0, 1}, {2, 1}, {3, 1}, {1, 1}, {2, 1}});
    CHECK(e.forward(input) == expected);
}

TEST_CASE("order-infinity inverse map collapses powers first") {
    DefiningGraph h = three_gen_graph(0);
    Elimination e = eliminate_rinf(h, 0);
    int sp = 2, spp = 3;
    // (s0')^-1 s1 s0' s0'' s2^2 s0' (s0'')^2  ->  s0 s1 s0^-1 s0^-1 s2^2 s0^-1
    Word input = w({{sp, -1}, {0, 1}, {sp, 1}, {spp, 1}, {1, 1}, {1, 1}, {sp, 1}, {spp, 1}, {spp, 1}});
    Word expected = w({{0, 1}, {1, 1}, {0, -1}, {0, -1}, {2, 1}, {2, 1}, {0, -1}});
    CHECK(e.backward(input) == expected);
}

TEST_CASE("eliminating the free generator of the line gives the infinite dihedral line") {
    Presentation p = parse_presentation("raach { a:inf; }");
    Elimination e = eliminate_rinf(*p.defining_graph, 0);
    Presentation q = presentation_from_graph(e.transformed);
    LocalGraph b1 = ball(p, 4);
    LocalGraph b2 = ball(q, 4);
    CHECK(b1.n() == 9);
    CHECK(b2.n() == 9);
    CHECK(find_isomorphism(b1, b2).has_value());
}

TEST_CASE("word map round-trips preserve group elements") {
    std::mt19937 rng(99);
    DefiningGraph h;
    h.vertices = {"s0", "t"};
    h.orders = {GeneratorOrder::finite(4), GeneratorOrder::finite(3)};
    h.add_edge(0, 1);
    Presentation p = presentation_from_graph(h);
    Elimination e = eliminate_r4(h, 0);
    std::uniform_int_distribution<int> len(0, 14), gen(0, 1), sign(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        Word word;
        int n = len(rng);
        for (int i = 0; i < n; ++i) word.letters.push_back({gen(rng), sign(rng) ? 1 : -1});
        Word back = e.backward(e.forward(word));
        CHECK(normal_form(p, back) == normal_form(p, word));
    }
}

TEST_CASE("associated pairs of source and transformed graphs agree") {
    DefiningGraph h;
    h.vertices = {"x", "s0", "y"};
    h.orders = {GeneratorOrder::finite(2), GeneratorOrder::infinite(), GeneratorOrder::finite(3)};
    h.add_edge(0, 1);
    Elimination e = eliminate_rinf(h, 1);
    AssociatedPair before = associated_pair(h);
    AssociatedPair after = associated_pair(e.transformed);
    CHECK(before.size() == after.size());
    CHECK(find_weighted_isomorphism(before, after).has_value());
}

TEST_CASE("preconditions are enforced") {
    DefiningGraph h = three_gen_graph(4);
    CHECK_THROWS_AS(eliminate_r4(h, 1), InvalidInput);   // s1 has infinite order
    CHECK_THROWS_AS(eliminate_rinf(h, 0), InvalidInput); // s0 has order 4
}
