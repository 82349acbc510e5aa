#include "doctest.h"

#include "curvachay/errors.hpp"
#include "curvachay/matrix.hpp"
#include "curvachay/rational.hpp"

using namespace curvachay;

TEST_CASE("rationals canonicalize") {
    Rational q = rat(2, 4);
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 2);
    CHECK(to_fraction_string(rat(-3, 6)) == "-1/2");
    CHECK(to_fraction_string(rat(4, 2)) == "2");
    CHECK(rational_from_string("7/3") == rat(7, 3));
    CHECK_THROWS_AS(rat(1, 0), InvalidInput);
}

TEST_CASE("exact inverse and schur complement") {
    RatMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == RatMatrix::identity(2));

    RatMatrix s(3, 3);
    s.at(0, 0) = 4; s.at(0, 1) = 2; s.at(0, 2) = 2;
    s.at(1, 0) = 2; s.at(1, 1) = 2; s.at(1, 2) = 0;
    s.at(2, 0) = 2; s.at(2, 1) = 0; s.at(2, 2) = 2;
    RatMatrix sc = schur_complement(s, {0}, {1, 2});
    CHECK(sc.rows() == 1);
    CHECK(sc.at(0, 0) == 0);

    RatMatrix bad(3, 3);
    bad.at(0, 0) = 1;
    bad.at(1, 1) = 1; bad.at(1, 2) = 1;
    bad.at(2, 1) = 1; bad.at(2, 2) = 1;
    CHECK_THROWS_AS(schur_complement(bad, {0}, {1, 2}), SingularBlock);

    CHECK_FALSE(bad.inverse().has_value());
}

TEST_CASE("row sums of laplacian-shaped matrices") {
    RatMatrix l(2, 2);
    l.at(0, 0) = -2; l.at(0, 1) = 2;
    l.at(1, 0) = 2; l.at(1, 1) = -2;
    for (const auto& s : l.row_sums()) CHECK(s == 0);
    CHECK(l.is_symmetric());
}
