#include <doctest.h>

#include "hyperclass/rational.hpp"

using namespace hyperclass;

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-11/12") == Rat(-11, 12));
    CHECK_THROWS_AS(parse_rational("1/x"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);

    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("floor and fractional part") {
    CHECK(rat_floor_ll(Rat(7, 2)) == 3);
    CHECK(rat_floor_ll(Rat(-7, 2)) == -4);
    CHECK(rat_floor_ll(Rat(-4)) == -4);
    CHECK(rat_ceil_ll(Rat(7, 2)) == 4);
    CHECK(frac(Rat(-1, 6)) == Rat(5, 6));
    CHECK(frac(Rat(13, 6)) == Rat(1, 6));
    CHECK(frac(Rat(-3)) == 0);
    CHECK(is_integer(Rat(6, 3)));
    CHECK_FALSE(is_integer(Rat(6, 4)));
}

TEST_CASE("common denominator") {
    CHECK(common_denominator({Rat(1, 2), Rat(1, 6), Rat(1, 3)}) == 6);
    CHECK(common_denominator({Rat(0), Rat(2)}) == 1);
    CHECK(common_denominator({}) == 1);
    CHECK(common_denominator({Rat(1, 4), Rat(1, 6)}) == 12);
}

TEST_CASE("fraction order compares denominators first") {
    CHECK(frac_order_less(Rat(1, 2), Rat(1, 6)));
    CHECK(frac_order_less(Rat(1, 6), Rat(5, 6)));
    CHECK_FALSE(frac_order_less(Rat(5, 6), Rat(1, 6)));
    CHECK(tuple_frac_less({Rat(1, 2), Rat(1, 6)}, {Rat(1, 2), Rat(5, 6)}));
    CHECK(tuple_frac_less({Rat(1, 4)}, {Rat(1, 6)}));
}
