#include "doctest.h"
#include "kneser/exactval.hpp"

using namespace kneser;

TEST_CASE("RootVal exact comparison against rationals") {
    RootVal r2(Rat(0), Rat(1), Rat(2));  // sqrt(2)
    CHECK(r2.cmp(Rat(141421356, 100000000)) > 0);
    CHECK(r2.cmp(Rat(141421357, 100000000)) < 0);
    CHECK(r2 > Rat(1));
    CHECK(r2 < Rat(2));

    RootVal v(Rat(3), Rat(-1), Rat(2));  // 3 - sqrt(2)
    CHECK(v.cmp(Rat(158578643, 100000000)) > 0);
    CHECK(v.cmp(Rat(158578644, 100000000)) < 0);

    RootVal exact(Rat(1, 2), Rat(1, 4), Rat(4));  // 1/2 + (1/4)*2 = 1
    CHECK(exact.cmp(Rat(1)) == 0);
}

TEST_CASE("RootVal rationality detection") {
    RootVal plain(Rat(7, 3));
    CHECK(plain.is_rational());
    CHECK(plain.rational_value() == Rat(7, 3));

    RootVal zero_rad(Rat(5), Rat(3), Rat(0));
    CHECK(zero_rad.is_rational());
    CHECK(zero_rad.rational_value() == 5);

    RootVal r2(Rat(0), Rat(1), Rat(2));
    CHECK_FALSE(r2.is_rational());
    CHECK_THROWS_AS(r2.rational_value(), std::logic_error);

    CHECK_THROWS_AS(RootVal(Rat(0), Rat(1), Rat(-1)), std::invalid_argument);
}

TEST_CASE("decimal output uses directed rounding") {
    RootVal r2(Rat(0), Rat(1), Rat(2));
    CHECK(r2.decimal(Round::down) == "1.41421356237");
    CHECK(r2.decimal(Round::up) == "1.41421356238");
    CHECK(decimal_str(Rat(1, 3), Round::down) == "0.333333333333");
    CHECK(decimal_str(Rat(1, 3), Round::up) == "0.333333333334");
    CHECK(decimal_str(Rat(1, 2), Round::down) == "0.5");
    CHECK(r2.approx(Round::down) < r2.approx(Round::up));
}

TEST_CASE("abs_leq_root resolves |q| <= c sqrt(t) exactly") {
    CHECK(abs_leq_root(Rat(2), Rat(1), Rat(4)));        // 2 <= 2
    CHECK(abs_leq_root(Rat(-2), Rat(1), Rat(4)));       // |-2| <= 2
    CHECK_FALSE(abs_leq_root(Rat(3), Rat(1), Rat(8)));  // 9 > 8
    CHECK(abs_leq_root(Rat(0), Rat(0), Rat(0)));
    CHECK_THROWS_AS(abs_leq_root(Rat(1), Rat(-1), Rat(1)), std::invalid_argument);
}

TEST_CASE("rat_str reduces to lowest terms") {
    CHECK(rat_str(Rat(2, 6)) == "1/3");
    CHECK(rat_str(Rat(4, 2)) == "2");
    CHECK(rat_str(Rat(-3, 9)) == "-1/3");
}
