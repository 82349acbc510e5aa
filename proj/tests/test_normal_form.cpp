#include "doctest.h"

#include <random>

#include "curvachay/errors.hpp"
#include "curvachay/normal_form.hpp"
#include "curvachay/todd_coxeter.hpp"

using namespace curvachay;

namespace {

Word make_word(std::initializer_list<Letter> ls) { return Word{std::vector<Letter>(ls)}; }

Word random_word(const Presentation& p, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(p.alphabet.size()) - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return w;
}

}  // namespace

TEST_CASE("order-3 inverse becomes the squared representative") {
    Presentation p = parse_presentation("raach { a:3; }");
    GroupElement g = normal_form(p, make_word({{0, -1}}));
    REQUIRE(g.syllables.size() == 1);
    CHECK(g.syllables[0].exp == 2);
    CHECK(g == normal_form(p, make_word({{0, 1}, {0, 1}})));
    CHECK(word_length(*p.defining_graph, g) == 1);  // spelled as one inverse letter
}

TEST_CASE("commuting free generators sort into one normal form") {
    Presentation p = parse_presentation("raach { a:inf, b:inf; commute (a,b); }");
    CHECK(normal_form(p, make_word({{0, 1}, {1, 1}})) == normal_form(p, make_word({{1, 1}, {0, 1}})));
}

TEST_CASE("non-commuting involutions stay apart, dihedral quotient agrees") {
    Presentation p = parse_presentation("raach { a:2, b:2; }");
    Word ababab = make_word({{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}});
    Word bababa = make_word({{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}});
    CHECK_FALSE(normal_form(p, ababab) == normal_form(p, bababa));

    // oracle: finite dihedral quotients separate the words, so they differ
    // in the free product as well
    Presentation d3 = parse_presentation("group <a,b | a^2, b^2, a b a b a b>");
    CosetTable t3 = todd_coxeter(d3, 64);
    CHECK(t3.n() == 6);
    Word abab = make_word({{0, 1}, {1, 1}, {0, 1}, {1, 1}});
    Word baba = make_word({{1, 1}, {0, 1}, {1, 1}, {0, 1}});
    CHECK_FALSE(normal_form(p, abab) == normal_form(p, baba));
    CHECK(t3.trace(0, abab) != t3.trace(0, baba));

    Presentation d4 = parse_presentation("group <a,b | a^2, b^2, a b a b a b a b>");
    CosetTable t4 = todd_coxeter(d4, 64);
    CHECK(t4.n() == 8);
    CHECK(t4.trace(0, ababab) != t4.trace(0, bababa));
}

TEST_CASE("single letter multiplications") {
    Presentation p = parse_presentation("raach { a:2, b:3; }");
    GroupElement id;
    GroupElement a = multiply(p, id, {0, 1});
    REQUIRE(a.syllables.size() == 1);
    CHECK(multiply(p, a, {0, 1}).is_identity());
    GroupElement b = multiply(p, id, {1, 1});
    CHECK(multiply(p, multiply(p, b, {1, 1}), {1, 1}).is_identity());
    // multiply then undo
    GroupElement ab = multiply(p, a, {1, 1});
    CHECK(multiply(p, ab, {1, -1}) == a);
}

TEST_CASE("deep alternating products in the free abelian plane") {
    Presentation p = parse_presentation("raach { a:inf, b:inf; commute (a,b); }");
    GroupElement g;
    long ea = 0, eb = 0;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int step = 0; step < 1000; ++step) {
        int c = pick(rng);
        Letter l{c / 2, c % 2 ? -1 : 1};
        g = multiply(p, g, l);
        (l.gen == 0 ? ea : eb) += l.sign;
        CHECK(word_length(*p.defining_graph, g) <= step + 1);
    }
    // oracle: integer pair arithmetic
    GroupElement expected;
    if (ea) expected.syllables.push_back({0, ea});
    if (eb) expected.syllables.push_back({1, eb});
    CHECK(g == expected);
}

TEST_CASE("normal form is a congruence under concatenation") {
    std::mt19937 rng(2026);
    for (const char* text : {"raach { a:2, b:3, c:4; commute (a,b); }",
                             "raach { a:inf, b:2; commute (a,b); }", "raach { a:3, b:3; }"}) {
        Presentation p = parse_presentation(text);
        for (int trial = 0; trial < 3000; ++trial) {
            Word u = random_word(p, rng, 8);
            Word v = random_word(p, rng, 8);
            Word uv = u;
            uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
            GroupElement incremental = normal_form(p, u);
            for (const Letter& l : v.letters) incremental = multiply(p, incremental, l);
            CHECK(incremental == normal_form(p, uv));
        }
    }
}

TEST_CASE("group inverse cancels") {
    Presentation p = parse_presentation("raach { a:4, b:3, c:inf; commute (b,c); }");
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(p, rng, 10);
        GroupElement g = normal_form(p, w);
        GroupElement gi = group_inverse(p, g);
        GroupElement prod = g;
        for (const Syllable& s : gi.syllables)
            for (int k = 0; k < std::abs(s.exp); ++k) prod = multiply(p, prod, {s.gen, s.exp > 0 ? 1 : -1});
        CHECK(prod.is_identity());
    }
}

TEST_CASE("normal forms reject general presentations") {
    Presentation p = parse_presentation("group <a | a^2>");
    CHECK_THROWS_AS(normal_form(p, Word{}), InvalidInput);
}
