#include <doctest.h>

#include <random>

#include "hyperclass/lp.hpp"

using namespace hyperclass;

TEST_CASE("strict one-variable systems") {
    InequalitySystem sys;
    sys.num_vars = 1;
    sys.add({Rat(1)}, Rel::Ge, 0);
    sys.add({Rat(1)}, Rel::Gt, Rat(1, 2));
    sys.add({Rat(1)}, Rel::Lt, 1);
    auto w = solve_mixed_inequalities(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] > Rat(1, 2));
    CHECK((*w)[0] < 1);

    InequalitySystem bad;
    bad.num_vars = 1;
    bad.add({Rat(1)}, Rel::Ge, 1);
    bad.add({Rat(1)}, Rel::Lt, 1);
    CHECK_FALSE(solve_mixed_inequalities(bad).has_value());
}

TEST_CASE("floor-vector witness (the Gauss subproblem)") {
    // alpha in [0,1)^3 with floor(alpha1+alpha3) = 1 and floor(alpha2+alpha3) = 0.
    InequalitySystem sys;
    sys.num_vars = 3;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rat> unit(3, Rat(0));
        unit[i] = 1;
        sys.add(unit, Rel::Ge, 0);
        sys.add(unit, Rel::Lt, 1);
    }
    sys.add({Rat(1), Rat(0), Rat(1)}, Rel::Gt, 1);
    sys.add({Rat(1), Rat(0), Rat(1)}, Rel::Lt, 2);
    sys.add({Rat(0), Rat(1), Rat(1)}, Rel::Gt, 0);
    sys.add({Rat(0), Rat(1), Rat(1)}, Rel::Lt, 1);
    auto w = solve_mixed_inequalities(sys);
    REQUIRE(w.has_value());
    CHECK(rat_floor_ll((*w)[0] + (*w)[2]) == 1);
    CHECK(rat_floor_ll((*w)[1] + (*w)[2]) == 0);
}

TEST_CASE("equalities and free variables") {
    // x + y = 1, x - y = 3 has the unique solution (2, -1).
    InequalitySystem sys;
    sys.num_vars = 2;
    sys.add({Rat(1), Rat(1)}, Rel::Eq, 1);
    sys.add({Rat(1), Rat(-1)}, Rel::Eq, 3);
    auto w = solve_mixed_inequalities(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 2);
    CHECK((*w)[1] == -1);
}

TEST_CASE("maximization over a bounded polytope") {
    // max x + y over the triangle x, y >= 0, x + 2y <= 4 is 4 at (4, 0).
    std::vector<LinConstraint> cons;
    cons.push_back({{Rat(1), Rat(0)}, Rel::Ge, 0});
    cons.push_back({{Rat(0), Rat(1)}, Rel::Ge, 0});
    cons.push_back({{Rat(1), Rat(2)}, Rel::Le, 4});
    LpResult res = lp_maximize(2, cons, {Rat(1), Rat(1)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == 4);

    LpResult unb = lp_maximize(2, {{{Rat(1), Rat(0)}, Rel::Ge, 0}}, {Rat(1), Rat(0)});
    CHECK(unb.status == LpStatus::Unbounded);
}

TEST_CASE("random feasible systems return exact witnesses") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        // Build a system satisfied by a known random rational point.
        std::vector<Rat> point(n);
        for (auto& x : point) x = Rat(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 6);
        InequalitySystem sys;
        sys.num_vars = n;
        for (int c = 0; c < n + 3; ++c) {
            std::vector<Rat> coef(n);
            Rat value = 0;
            for (int i = 0; i < n; ++i) {
                coef[i] = Rat(static_cast<long long>(rng() % 9) - 4);
                value += coef[i] * point[i];
            }
            switch (rng() % 3) {
            case 0: sys.add(coef, Rel::Ge, value - Rat(1 + rng() % 3)); break;
            case 1: sys.add(coef, Rel::Le, value + Rat(1 + rng() % 3)); break;
            default: sys.add(coef, Rel::Lt, value + 1); break;
            }
        }
        auto w = solve_mixed_inequalities(sys);
        REQUIRE(w.has_value());
        CHECK(sys.satisfied_by(*w)); // exact re-evaluation
    }
}
