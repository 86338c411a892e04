#include <doctest.h>

#include "hyperclass/cone.hpp"
#include "hyperclass/lp.hpp"

using namespace hyperclass;

TEST_CASE("facets of the basic configurations") {
    // Gauss: {x1, x2, x1+x3, x2+x3}.
    std::vector<IntVec> gauss = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
    auto facets = cone_facets(gauss);
    std::set<IntVec> expected = {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK(std::set<IntVec>(facets.begin(), facets.end()) == expected);
    CHECK(std::is_sorted(facets.begin(), facets.end()));

    std::vector<IntVec> g3 = {{1, 1}, {0, 1}, {-1, 1}, {2, 1}};
    auto g3f = cone_facets(g3);
    CHECK(std::set<IntVec>(g3f.begin(), g3f.end()) ==
          std::set<IntVec>{{1, 1}, {-1, 2}});

    auto orthant = cone_facets({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(std::set<IntVec>(orthant.begin(), orthant.end()) ==
          std::set<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(cone_facets({{1, 0}, {-1, 0}, {0, 1}}), ConeError); // not pointed
    CHECK_THROWS_AS(cone_facets({{1, 0}}), ConeError);                 // not full-dim
    CHECK_THROWS_AS(cone_facets({{1, 0}, {0, 0}}), InputError);        // zero vector
}

TEST_CASE("facet properties: nonnegative, tight on dim-1 generators, irredundant") {
    std::vector<std::vector<IntVec>> configs = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}},
        {{1, 1}, {0, 1}, {-1, 1}, {2, 1}},
        // H1 points
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
         {1, 1, 0, -1}, {-1, 1, 1, 0}},
    };
    for (const auto& gens : configs) {
        const int r = static_cast<int>(gens[0].size());
        auto facets = cone_facets(gens);
        for (const auto& m : facets) {
            std::vector<IntVec> tight;
            for (const auto& g : gens) {
                long long v = dot(m, g);
                CHECK(v >= 0);
                if (v == 0) tight.push_back(g);
            }
            CHECK(rank(tight) == r - 1);
            IntVec normalized = content_normalize(m);
            CHECK(normalized == m);
        }
        // Reversing the description reproduces the cone on both sides.
        auto rays = cone_rays(facets);
        for (const auto& g : gens)
            CHECK(in_cone_hull(rays, std::vector<Rat>(g.begin(), g.end())));
        for (const auto& ray : rays)
            CHECK(in_cone_hull(gens, std::vector<Rat>(ray.begin(), ray.end())));
    }
}
