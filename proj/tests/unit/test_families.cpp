#include <doctest.h>

#include <functional>

#include "hyperclass/families.hpp"

using namespace hyperclass;

TEST_CASE("family parsing") {
    CHECK(parse_family("FD").first == Family::FD);
    CHECK(parse_family("f_d").first == Family::FD);
    auto f4 = parse_family("F4");
    CHECK(f4.first == Family::FC);
    CHECK(f4.second == 2);
    CHECK(parse_family("h7").first == Family::H7);
    CHECK_THROWS_AS(parse_family("F9"), UnsupportedError);
}

TEST_CASE("systems match the published combinatorial data") {
    const GkzSystem& fd2 = family_system(Family::FD, 2);
    CHECK(fd2.num_points == 6);
    CHECK(fd2.volume == 3);

    const GkzSystem& h5 = family_system(Family::H5, 0);
    std::set<IntVec> h5f(h5.facets.begin(), h5.facets.end());
    CHECK(h5f == std::set<IntVec>{{1, 0, 0}, {1, 2, 0}, {1, 0, 1}, {1, 2, 3}});

    const GkzSystem& g3 = family_system(Family::G3, 0);
    CHECK(g3.volume == 3);
    CHECK(std::set<IntVec>(g3.facets.begin(), g3.facets.end()) ==
          std::set<IntVec>{{1, 1}, {-1, 2}});

    for (Family f : {Family::G2, Family::H2, Family::H3, Family::H6, Family::H7})
        CHECK_NOTHROW(family_system(f, 0)); // transported families verify on build
    CHECK_NOTHROW(family_system(Family::FB, 3));
}

TEST_CASE("parameter maps") {
    CHECK(alpha_from_classical(Family::FD, 2, {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)}) ==
          std::vector<Rat>{Rat(-1, 6), Rat(-5, 6), Rat(-5, 6), Rat(-2, 3)});
    CHECK(alpha_from_classical(Family::G3, 0, {Rat(1, 2), Rat(1, 3)}) ==
          std::vector<Rat>{Rat(-1, 2), Rat(-5, 6)});
    CHECK(alpha_from_classical(Family::H4, 0, {Rat(1), Rat(2), Rat(3), Rat(4)}) ==
          std::vector<Rat>{Rat(-1), Rat(-2), Rat(2), Rat(3)});
    CHECK_THROWS_AS(alpha_from_classical(Family::H4, 0, {Rat(1)}), InputError);

    // classical_from_alpha inverts alpha_from_classical for every family.
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::Gauss, 0}, {Family::FD, 3}, {Family::FA, 2}, {Family::FB, 2},
             {Family::FC, 3}, {Family::G1, 0}, {Family::G2, 0}, {Family::G3, 0},
             {Family::H1, 0}, {Family::H2, 0}, {Family::H3, 0}, {Family::H4, 0},
             {Family::H5, 0}, {Family::H6, 0}, {Family::H7, 0}}) {
        std::vector<Rat> params;
        for (int i = 0; i < param_arity(f, n); ++i) params.push_back(Rat(i + 1, 7));
        CHECK(classical_from_alpha(f, n, alpha_from_classical(f, n, params)) == params);
    }
}

TEST_CASE("variable-drop restrictions") {
    Restriction r1 = restrict_params(Family::FD, 3,
                                     {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)}, 3);
    CHECK(r1.fam == Family::FD);
    CHECK(r1.n == 2);
    CHECK(r1.params == std::vector<Rat>{Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)});

    Restriction r2 = restrict_params(Family::FC, 3,
                                     {Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1, 3), Rat(1, 2)}, 3);
    CHECK(r2.fam == Family::FC);
    CHECK(r2.n == 2);
    CHECK(r2.params == std::vector<Rat>{Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1, 3)});

    // Setting y = 0 in H4 leaves the quadratic Gauss factor.
    Restriction r3 = restrict_params(Family::H4, 0, {Rat(1, 6), Rat(5, 6), Rat(1, 2), Rat(1, 3)}, 2);
    CHECK(r3.fam == Family::Gauss);
    CHECK(r3.params == std::vector<Rat>{Rat(1, 12), Rat(7, 12), Rat(1, 2)});
    Restriction r4 = restrict_params(Family::H4, 0, {Rat(1, 6), Rat(5, 6), Rat(1, 2), Rat(1, 3)}, 1);
    CHECK(r4.params == std::vector<Rat>{Rat(1, 6), Rat(5, 6), Rat(1, 3)});

    CHECK_THROWS_AS(restrict_params(Family::G3, 0, {Rat(1, 2), Rat(1, 3)}, 1),
                    UnsupportedError);
    CHECK_THROWS_AS(restrict_params(Family::FD, 3,
                                    {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)}, 4),
                    InputError);
}

TEST_CASE("necessary Gauss triples") {
    auto f1 = necessary_gauss_triples(Family::FD, 2, {Rat(1, 6), Rat(5, 6), Rat(5, 6), Rat(1, 3)});
    REQUIRE(f1.size() == 3); // (a,b1,c), (a,b2,c), (a,b1+b2,c)
    CHECK(f1[0] == GaussTriple{Rat(1, 6), Rat(5, 6), Rat(1, 3)});
    CHECK(f1[2] == GaussTriple{Rat(1, 6), Rat(5, 3), Rat(1, 3)});

    auto h4 = necessary_gauss_triples(Family::H4, 0, {Rat(1, 6), Rat(5, 6), Rat(1, 2), Rat(1, 3)});
    REQUIRE(h4.size() == 3);
    CHECK(h4[0] == GaussTriple{Rat(1, 12), Rat(7, 12), Rat(1, 2)});
    CHECK(h4[1] == GaussTriple{Rat(1, 6), Rat(5, 6), Rat(1, 3)});
    CHECK(h4[2] == GaussTriple{Rat(5, 6), Rat(1, 6) - Rat(1), Rat(1, 3)});

    auto h1 = necessary_gauss_triples(Family::H1, 0, {Rat(1, 3), Rat(5, 6), Rat(1, 2), Rat(2, 3)});
    REQUIRE(h1.size() == 2);
    CHECK(h1[0] == GaussTriple{Rat(1, 3), Rat(5, 6), Rat(2, 3)});
    CHECK(h1[1] == GaussTriple{Rat(5, 6) - Rat(2, 3), Rat(1, 2), Rat(2, 3) - Rat(1, 3)});
}

namespace {

// Published non-resonance conditions, evaluated in integer eighths.
using Prose = std::function<bool(const IntVec&)>;

bool nonint(long long v) { return ((v % 8) + 8) % 8 != 0; }

std::vector<std::pair<std::pair<Family, int>, Prose>> prose_nonresonance() {
    std::vector<std::pair<std::pair<Family, int>, Prose>> out;
    out.push_back({{Family::Gauss, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[1]) && nonint(p[2] - p[0]) && nonint(p[2] - p[1]);
    }});
    for (int n : {2, 3})
        out.push_back({{Family::FD, n}, [n](const IntVec& p) {
            long long sb = 0;
            bool ok = nonint(p[0]);
            for (int i = 1; i <= n; ++i) { ok = ok && nonint(p[i]); sb += p[i]; }
            return ok && nonint(p[n + 1] - p[0]) && nonint(p[n + 1] - sb);
        }});
    for (int n : {2, 3})
        out.push_back({{Family::FA, n}, [n](const IntVec& p) {
            bool ok = true;
            for (int i = 1; i <= n; ++i)
                ok = ok && nonint(p[i]) && nonint(p[n + i] - p[i]);
            for (int mask = 0; mask < (1 << n); ++mask) {
                long long v = -p[0];
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) v += p[n + 1 + i];
                ok = ok && nonint(v);
            }
            return ok;
        }});
    out.push_back({{Family::FB, 2}, [](const IntVec& p) {
        bool ok = nonint(p[0]) && nonint(p[1]) && nonint(p[2]) && nonint(p[3]);
        for (long long d1 : {p[0], p[2]})
            for (long long d2 : {p[1], p[3]}) ok = ok && nonint(p[4] - d1 - d2);
        return ok;
    }});
    for (int n : {2, 3})
        out.push_back({{Family::FC, n}, [n](const IntVec& p) {
            bool ok = true;
            for (int mask = 0; mask < (1 << n); ++mask) {
                long long s = 0;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) s += p[2 + i];
                ok = ok && nonint(s - p[0]) && nonint(s - p[1]);
            }
            return ok;
        }});
    out.push_back({{Family::G1, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[0] + p[1]) && nonint(p[0] + p[2]) &&
               nonint(p[1] + p[2]);
    }});
    out.push_back({{Family::G2, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[1]) && nonint(p[0] + p[2]) && nonint(p[1] + p[3]) &&
               nonint(p[2] + p[3]);
    }});
    out.push_back({{Family::G3, 0}, [](const IntVec& p) {
        return nonint(2 * p[0] + p[1]) && nonint(p[0] + 2 * p[1]);
    }});
    out.push_back({{Family::H1, 0}, [](const IntVec& p) {
        return nonint(p[1]) && nonint(p[2]) && nonint(p[0] + p[1]) && nonint(p[0] + p[2]) &&
               nonint(p[3] - p[1]) && nonint(p[3] - p[0] - p[2]) &&
               nonint(2 * p[3] - p[0] - p[1]);
    }});
    out.push_back({{Family::H2, 0}, [](const IntVec& p) {
        return nonint(p[1]) && nonint(p[2]) && nonint(p[3]) && nonint(p[0] + p[2]) &&
               nonint(p[0] + p[3]) && nonint(p[4] - p[1]) && nonint(p[4] - p[0] - p[2]) &&
               nonint(p[4] - p[0] - p[3]);
    }});
    out.push_back({{Family::H3, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[1]) && nonint(p[2] - p[0]) &&
               nonint(2 * p[2] - p[0] - p[1]);
    }});
    out.push_back({{Family::H4, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[1]) && nonint(2 * p[2] - p[0]) &&
               nonint(p[3] - p[0]) && nonint(p[3] - p[1]) &&
               nonint(2 * p[2] + p[3] - p[0]);
    }});
    out.push_back({{Family::H5, 0}, [](const IntVec& p) {
        return nonint(p[0]) && nonint(p[0] + 2 * p[1]) && nonint(p[2] - p[0]) &&
               nonint(3 * p[2] - p[0] - 2 * p[1]);
    }});
    out.push_back({{Family::H6, 0}, [](const IntVec& p) {
        return nonint(p[0] + p[1]) && nonint(p[0] + 2 * p[1]) && nonint(p[2]) &&
               nonint(p[0] + p[2]);
    }});
    out.push_back({{Family::H7, 0}, [](const IntVec& p) {
        return nonint(p[1]) && nonint(p[2]) && nonint(p[0] + p[1]) && nonint(p[0] + p[2]) &&
               nonint(2 * p[3] - p[0] - p[1]) && nonint(2 * p[3] - p[0] - p[2]);
    }});
    return out;
}

} // namespace

TEST_CASE("published non-resonance conditions match the facet test on a grid") {
    for (const auto& [key, prose] : prose_nonresonance()) {
        auto [fam, n] = key;
        const GkzSystem& sys = family_system(fam, n);
        const int arity = param_arity(fam, n);

        // alpha in eighths: jac * p + 8 * base.
        std::vector<Rat> zero(arity, Rat(0));
        std::vector<Rat> base = alpha_from_classical(fam, n, zero);
        std::vector<IntVec> jac(sys.r, IntVec(arity, 0));
        IntVec base8(sys.r);
        for (int i = 0; i < sys.r; ++i) base8[i] = rat_floor_ll(8 * base[i]);
        for (int j = 0; j < arity; ++j) {
            std::vector<Rat> probe = zero;
            probe[j] = 1;
            auto a = alpha_from_classical(fam, n, probe);
            for (int i = 0; i < sys.r; ++i) jac[i][j] = rat_floor_ll(a[i] - base[i]);
        }

        long long total = 1;
        for (int j = 0; j < arity; ++j) total *= 8;
        long long mismatches = 0;
        IntVec a8(sys.r);
        for (long long code = 0; code < total; ++code) {
            IntVec p(arity);
            long long c = code;
            for (int j = 0; j < arity; ++j) { p[j] = c % 8; c /= 8; }
            for (int i = 0; i < sys.r; ++i) {
                a8[i] = base8[i];
                for (int j = 0; j < arity; ++j) a8[i] += jac[i][j] * p[j];
            }
            bool facet_nonres = true;
            for (const auto& m : sys.facets) {
                long long v = 0;
                for (int i = 0; i < sys.r; ++i) v += m[i] * a8[i];
                if (((v % 8) + 8) % 8 == 0) facet_nonres = false;
            }
            if (facet_nonres != prose(p)) ++mismatches;
        }
        INFO(family_name(fam) << " n=" << n);
        CHECK(mismatches == 0);
    }
}
