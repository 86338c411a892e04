#include <doctest.h>

#include "hyperclass/apex.hpp"
#include "hyperclass/families.hpp"

using namespace hyperclass;

TEST_CASE("apexpoint counts at published parameter tuples") {
    const GkzSystem& gauss = family_system(Family::Gauss, 0);
    // (a,b,c) = (1/6,5/6,1/3)
    auto aps = apexpoints(gauss, alpha_from_classical(Family::Gauss, 0,
                                                      {Rat(1, 6), Rat(5, 6), Rat(1, 3)}));
    CHECK(aps.size() == 2);
    CHECK(std::is_sorted(aps.begin(), aps.end(), [](const auto& x, const auto& y) {
        return x.offset < y.offset;
    }));
    for (const auto& ap : aps) {
        for (const Rat& v : ap.facet_values) CHECK(v >= 0);
        // p - a_i leaves the cone for every generator.
        for (const auto& point : gauss.points) {
            bool outside = false;
            for (int j = 0; j < gauss.facet_count(); ++j) {
                Rat v = ap.facet_values[j] - Rat(dot(gauss.facets[j], point));
                if (v < 0) outside = true;
            }
            CHECK(outside);
        }
    }

    // FD n=2 at (a,b1,b2,c) = (1/6,5/6,5/6,1/3): n+1 = 3 apexpoints.
    const GkzSystem& fd2 = family_system(Family::FD, 2);
    CHECK(signature(fd2, alpha_from_classical(Family::FD, 2,
                                              {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)})) == 3);
}

TEST_CASE("algebraicity decisions") {
    const GkzSystem& gauss = family_system(Family::Gauss, 0);
    CHECK(is_algebraic(gauss, alpha_from_classical(Family::Gauss, 0,
                                                   {Rat(1, 2), Rat(1, 6), Rat(1, 3)})));
    const GkzSystem& fd2 = family_system(Family::FD, 2);
    CHECK(is_algebraic(fd2, alpha_from_classical(Family::FD, 2,
                                                 {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)})));
    const GkzSystem& fa3 = family_system(Family::FA, 3);
    std::vector<Rat> params{Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(5, 6),
                            Rat(2, 3), Rat(2, 3), Rat(2, 3)};
    CHECK_FALSE(is_algebraic(fa3, alpha_from_classical(Family::FA, 3, params)));
    // Resonant input is refused.
    CHECK_THROWS_AS(is_algebraic(gauss, std::vector<Rat>{Rat(1), Rat(1, 6), Rat(1, 3)}),
                    ResonanceError);
}

TEST_CASE("conjugation") {
    CHECK(conjugate_tuple({Rat(1, 6), Rat(5, 6), Rat(1, 3)}, 5) ==
          std::vector<Rat>{Rat(5, 6), Rat(1, 6), Rat(2, 3)});
    CHECK(conjugate_tuple({Rat(1, 2), Rat(1, 6), Rat(1, 3)}, 5) ==
          std::vector<Rat>{Rat(1, 2), Rat(5, 6), Rat(2, 3)});
    std::vector<Rat> t{Rat(3, 7), Rat(2, 7)};
    CHECK(conjugate_tuple(t, 1) == frac_tuple(t));
    CHECK_THROWS_AS(conjugate_tuple({Rat(1, 6)}, 2), InputError);
    CHECK(conjugation_orbit({Rat(1, 60), Rat(31, 60), Rat(1, 3)}).size() == 16);
}

TEST_CASE("coprime lifting") {
    CHECK(lift_coprime(5, 6, 12) == 5);
    CHECK(lift_coprime(3, 4, 60) == 7);
    CHECK(lift_coprime(1, 2, 8) == 1);
    CHECK_THROWS_AS(lift_coprime(2, 4, 8), InputError);
    CHECK_THROWS_AS(lift_coprime(1, 3, 8), InputError);
}

TEST_CASE("half-window witnesses") {
    CHECK(half_window_witness(Rat(2, 7), Rat(1, 3)) == 5);
    CHECK(half_window_witness(Rat(1, 3), Rat(1, 3)) == 1);
    CHECK_FALSE(half_window_witness(Rat(1, 4), Rat(2, 5)).has_value());
    CHECK_THROWS_AS(half_window_witness(Rat(1, 2), Rat(1, 3)), InputError);
    CHECK_THROWS_AS(half_window_witness(Rat(2, 7), Rat(1, 2)), InputError);
}

TEST_CASE("derived interlacing table for G1") {
    const GkzSystem& g1 = family_system(Family::G1, 0);
    InterlacingTable table = derive_interlacing(g1);
    CHECK(table.max_signature == 3);
    CHECK(table.maximal.size() == 2);
    for (const auto& row : table.maximal) {
        CHECK(row.sig == 3);
        CHECK(table.floors_of(row.witness) == row.floors);
    }
}
