#include <doctest.h>

#include "hyperclass/schwarz.hpp"

using namespace hyperclass;

TEST_CASE("the sporadic triple set") {
    const auto& triples = type2_triples();
    CHECK(triples.size() == 408);
    CHECK(triples.count({Rat(1, 2), Rat(1, 6), Rat(1, 3)}));
    CHECK(triples.count({Rat(1, 6), Rat(1, 2), Rat(1, 3)})); // swap closure
    CHECK_FALSE(triples.count({Rat(1, 4), Rat(3, 4), Rat(1, 2)})); // dihedral, not sporadic
    CHECK(type2_orbit_pair_representatives().size() == 40);
}

TEST_CASE("triple classification") {
    auto c1 = gauss_triple_classify(Rat(1, 4), Rat(3, 4), Rat(1, 2));
    CHECK(c1.kind == GaussClassification::Type1);
    CHECK(c1.form == Type1Form::MinusR);
    CHECK(c1.r == Rat(1, 4));

    auto c2 = gauss_triple_classify(Rat(1, 2), Rat(1, 6), Rat(1, 3));
    CHECK(c2.kind == GaussClassification::Type2);

    auto c3 = gauss_triple_classify(Rat(1, 3), Rat(1, 3), Rat(2, 3));
    CHECK(c3.kind == GaussClassification::NotAlgebraic);

    // (2/3, 1/6, 1/3) matches (r, r+1/2, 2r) at r = 2/3 modulo Z.
    auto c4 = gauss_triple_classify(Rat(2, 3), Rat(1, 6), Rat(1, 3));
    CHECK(c4.kind == GaussClassification::Type1);
    CHECK(c4.form == Type1Form::RPlusHalfTwoR);
    CHECK(c4.r == Rat(2, 3));

    CHECK(matches_type1_form(Type1Form::MinusR, Rat(1, 4),
                             {Rat(1, 4), Rat(3, 4), Rat(1, 2)}));
    CHECK_FALSE(matches_type1_form(Type1Form::MinusR, Rat(1, 2),
                                   {Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("classical interlacing test") {
    CHECK(gauss_is_algebraic(Rat(1, 2), Rat(1, 6), Rat(1, 3)));
    CHECK(gauss_is_algebraic(Rat(1, 3), Rat(2, 3), Rat(1, 2)));
    CHECK_FALSE(gauss_is_algebraic(Rat(1, 3), Rat(1, 3), Rat(2, 3)));
    // Reducible input is an error: c - a integral.
    CHECK_THROWS_AS(gauss_is_algebraic(Rat(1, 3), Rat(1, 6), Rat(1, 3)), InputError);
}

TEST_CASE("every sporadic triple is algebraic and the list is orbit-closed") {
    for (const auto& t : type2_triples()) {
        CHECK(gauss_is_algebraic(t[0], t[1], t[2]));
    }
}
