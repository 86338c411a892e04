#include <doctest.h>

#include "hyperclass/gkz.hpp"

using namespace hyperclass;

namespace {
std::vector<IntVec> gauss_points() {
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
}
} // namespace

TEST_CASE("relation lattices of the basic systems") {
    auto gauss = lattice_of_relations(gauss_points());
    CHECK(hermite_normal_form(gauss) == hermite_normal_form({{-1, -1, 1, 1}}));

    // Two-variable FD: the relations carry -1 at the b-coordinates (the
    // Gamma(1 - m_i - b_i) factors sit in the denominator of the series).
    std::vector<IntVec> fd2 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                               {1, 1, 0, -1}, {1, 0, 1, -1}};
    auto basis = lattice_of_relations(fd2);
    CHECK(basis.size() == 2);
    CHECK(hermite_normal_form(basis) ==
          hermite_normal_form({{-1, -1, 0, 1, 1, 0}, {-1, 0, -1, 1, 0, 1}}));

    std::vector<IntVec> g3 = {{1, 1}, {0, 1}, {-1, 1}, {2, 1}};
    CHECK(hermite_normal_form(lattice_of_relations(g3)) ==
          hermite_normal_form({{1, -2, 1, 0}, {-2, 1, 0, 1}}));

    CHECK_THROWS_AS(lattice_of_relations({{2, 0}, {0, 2}}), SpanError);
}

TEST_CASE("build_system validates and computes the grading form") {
    GkzSystem sys = build_system(gauss_points());
    CHECK(sys.h == IntVec{1, 1, 1});
    CHECK(sys.volume == 2);
    CHECK(sys.lattice_basis.size() == 1);
    CHECK(sys.lattice_touches_all);

    // FC at n=2 has volume 4.
    GkzSystem fc = build_system({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                 {1, 1, -1, 0}, {1, 1, 0, -1}});
    CHECK(fc.volume == 4);

    CHECK_THROWS_AS(build_system({{1, 0}, {0, 2}}), SpanError);
    // Spanning but no grading form: e1, -e1, e2.
    CHECK_THROWS_AS(build_system({{1, 0}, {-1, 0}, {0, 1}}), GradingFormError);
    CHECK_THROWS_AS(build_system({{1, 0}, {1, 0}, {0, 1}}), InputError); // duplicate
}

TEST_CASE("normalized volume by placing") {
    std::vector<IntVec> fd2 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                               {1, 1, 0, -1}, {1, 0, 1, -1}};
    CHECK(normalized_volume(fd2, {1, 1, 1, 1}) == 3);
    CHECK(normalized_volume(gauss_points(), {1, 1, 1}) == 2);
    CHECK_THROWS_AS(normalized_volume({{2, 0}, {0, 1}}, {1, 1}), InputError);
}

TEST_CASE("triangulation verification failure modes") {
    GkzSystem sys = build_system(gauss_points());
    // Single simplex misses the fourth point.
    auto rep = verify_triangulation(sys, {{0, 1, 2}});
    CHECK_FALSE(rep.ok);
    CHECK(rep.detail.find("coverage") != std::string::npos);

    // The honest two-simplex triangulation passes.
    auto good = verify_triangulation(sys, {{0, 1, 2}, {0, 1, 3}});
    CHECK(good.ok);
    CHECK(good.unimodular);
    CHECK(good.volume == 2);
    CHECK(good.saturated);

    // Overlapping simplices violate the pairwise face condition.
    std::vector<IntVec> square = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
    auto bad = verify_triangulation(build_system(square), {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});
    CHECK_FALSE(bad.ok);
}

TEST_CASE("non-resonance is integrality of facet values") {
    GkzSystem sys = build_system(gauss_points());
    // (a,b,c) = (1/2,1/6,1/3): alpha = (-1/2,-1/6,-2/3).
    CHECK(is_nonresonant(sys, {Rat(-1, 2), Rat(-1, 6), Rat(-2, 3)}));
    // a integral makes the first facet value integral.
    CHECK_FALSE(is_nonresonant(sys, {Rat(1), Rat(-1, 6), Rat(-2, 3)}));
    CHECK_THROWS_AS(is_nonresonant(sys, {Rat(1, 2)}), InputError);

    GkzSystem g3 = build_system({{1, 1}, {0, 1}, {-1, 1}, {2, 1}});
    // (a1,a2) = (1/3,1/3): 2a1+a2 = 1 is integral.
    CHECK_FALSE(is_nonresonant(g3, {Rat(-1, 3), Rat(-2, 3)}));
}

TEST_CASE("transport along a unimodular map") {
    GkzSystem sys = build_system(gauss_points());
    IntMat id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto [same, beta] = transport(id, sys, {Rat(1, 2), Rat(1, 3), Rat(1, 7)});
    CHECK(same.points == sys.points);
    CHECK(beta == std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(1, 7)});

    IntMat not_unimodular = {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(transport(not_unimodular, sys, beta), InputError);
}

TEST_CASE("bounded saturation probe accepts the Gauss system") {
    CHECK(bounded_saturation_check(build_system(gauss_points()), 3));
}
