#include "doctest.h"

#include "curvachay/errors.hpp"
#include "curvachay/todd_coxeter.hpp"

using namespace curvachay;

TEST_CASE("order-4 relator example enumerates four cosets") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2>");
    CosetTable t = todd_coxeter(p, 128);
    CHECK(t.n() == 4);
    CHECK(t.is_closed(p));
}

TEST_CASE("adding the square collapses to two cosets") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2, a^2>");
    CosetTable t = todd_coxeter(p, 128);
    CHECK(t.n() == 2);
    CHECK(t.is_closed(p));
}

TEST_CASE("cyclic group of order three") {
    Presentation p = parse_presentation("group <a | a^3>");
    CosetTable t = todd_coxeter(p, 128);
    CHECK(t.n() == 3);
    // the generator permutes cosets cyclically
    int c = t.act(0, CosetTable::column(0, 1));
    c = t.act(c, CosetTable::column(0, 1));
    c = t.act(c, CosetTable::column(0, 1));
    CHECK(c == 0);
}

TEST_CASE("budget exhaustion on an infinite group is distinct from bad input") {
    Presentation p = parse_presentation("group <a,b | a^2>");
    CHECK_THROWS_AS(todd_coxeter(p, 40), BudgetExceeded);
    CHECK_THROWS_AS(todd_coxeter(p, 0), InvalidInput);
}

TEST_CASE("enumeration is deterministic") {
    Presentation p = parse_presentation("group <a,b | a^2, b^2, a b a b a b a b>");
    CosetTable t1 = todd_coxeter(p, 128);
    CosetTable t2 = todd_coxeter(p, 128);
    CHECK(t1.n() == 8);
    CHECK(t1.action == t2.action);
}

TEST_CASE("raach presentations enumerate through their materialized relators") {
    Presentation p = parse_presentation("raach { a:2, b:2; commute (a,b); }");
    CosetTable t = todd_coxeter(p, 64);
    CHECK(t.n() == 4);  // Klein four group, Cayley graph a 4-cycle
    LocalGraph g = cayley_from_cosets(t);
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 4);
}

TEST_CASE("cayley graph of the order-4 relator example is complete") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2>");
    CosetTable t = todd_coxeter(p, 128);
    LocalGraph g = cayley_from_cosets(t);
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 6);  // K4: b acts as the square of a, adding diagonals
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    // the diagonal edge carries the merged letters b and b^-1
    LetterClasses lc = letter_classes(t);
    int b_col = CosetTable::column(1, 1);
    int b_inv = CosetTable::column(1, -1);
    CHECK(lc.class_of[b_col] == lc.class_of[b_inv]);
    CHECK(lc.members[lc.class_of[b_col]].size() == 2);
}

TEST_CASE("collapsed generators leave no edge") {
    Presentation p = parse_presentation("group <a,b | a^4, b^-1 a^2, a^2>");
    CosetTable t = todd_coxeter(p, 128);
    LetterClasses lc = letter_classes(t);
    // b = a^2 = e collapses; a and a^-1 merge into one involution class
    CHECK(lc.class_of[CosetTable::column(1, 1)] == -1);
    CHECK(lc.class_of[CosetTable::column(1, -1)] == -1);
    CHECK(lc.class_of[CosetTable::column(0, 1)] == lc.class_of[CosetTable::column(0, -1)]);
    LocalGraph g = cayley_from_cosets(t);
    CHECK(g.n() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.edge(0).labels_uv.size() == 2);  // a and a^-1 act identically
}

TEST_CASE("trivial relator produces the one-vertex graph") {
    Presentation p = parse_presentation("group <a | a>");
    CosetTable t = todd_coxeter(p, 16);
    CHECK(t.n() == 1);
    LocalGraph g = cayley_from_cosets(t);
    CHECK(g.n() == 1);
    CHECK(g.edges().empty());
}

TEST_CASE("json export uses one-based action arrays") {
    Presentation p = parse_presentation("group <a | a^2>");
    CosetTable t = todd_coxeter(p, 16);
    std::string j = t.to_json();
    CHECK(j.find("\"cosets\":2") != std::string::npos);
    CHECK(j.find("[2,1]") != std::string::npos);
}

TEST_CASE("heavier enumerations with coincidence cascades") {
    // mutual conjugation collapses everything
    Presentation trivial = parse_presentation("group <a,b | a^-1 b a b^-2, b^-1 a b a^-2>");
    CHECK(todd_coxeter(trivial, 512).n() == 1);

    // quaternion group of order eight
    Presentation q8 = parse_presentation("group <a,b | a^4, a^2 b^-2, b^-1 a b a>");
    CosetTable t8 = todd_coxeter(q8, 512);
    CHECK(t8.n() == 8);
    CHECK(t8.is_closed(q8));

    // symmetric group on four letters via a (2,3,4) presentation
    Presentation s4 = parse_presentation("group <a,b | a^2, b^3, a b a b a b a b>");
    CHECK(todd_coxeter(s4, 512).n() == 24);

    // symmetric group on five letters
    Presentation s5 = parse_presentation(
        "group <a,b | a^2, b^5, a b a b a b a b, a b^-1 a b a b^-1 a b a b^-1 a b>");
    CosetTable t120 = todd_coxeter(s5, 4096);
    CHECK(t120.n() == 120);
    CHECK(t120.is_closed(s5));
}

TEST_CASE("tight budgets still close with lookahead compaction") {
    // the dihedral group of order 48 usually wants spare cosets; lookahead
    // must reclaim dead ones when the cap sits close to the group order
    Presentation p = parse_presentation(
        "group <a,b | a^2, b^2, a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b a b>");
    int order = 48;
    bool closed_under_tight_budget = false;
    for (int budget = order; budget <= 4 * order; ++budget) {
        try {
            CosetTable t = todd_coxeter(p, budget);
            CHECK(t.n() == order);
            closed_under_tight_budget = true;
            break;
        } catch (const BudgetExceeded&) {
            continue;
        }
    }
    CHECK(closed_under_tight_budget);
}
