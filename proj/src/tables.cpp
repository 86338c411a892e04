#include "hyperclass/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperclass {

namespace {

std::vector<Rat> tuple(const std::string& text) {
    std::vector<Rat> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_rational(tok));
    return out;
}

std::vector<std::vector<Rat>> tuples(const std::vector<std::string>& rows) {
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(tuple(row));
    return out;
}

ParametricFamily pat(std::string label, std::vector<long long> slope,
                     const std::string& offsets, std::vector<Rat> excluded) {
    ParametricFamily f;
    f.label = std::move(label);
    f.slope = std::move(slope);
    f.offset = tuple(offsets);
    f.excluded_r = std::move(excluded);
    return f;
}

const Rat half(1, 2);

// (r, -r, 1/2), (r, r+1/2, 1/2), (r, r+1/2, 2r) with trailing 1/2 padding.
std::vector<ParametricFamily> type1_padded(int extra_halves) {
    std::string pad, padlab;
    for (int i = 0; i < extra_halves; ++i) {
        pad += " 1/2";
        padlab += ", 1/2";
    }
    auto widen = [&](std::vector<long long> s) {
        for (int i = 0; i < extra_halves; ++i) s.push_back(0);
        return s;
    };
    return {
        pat("(r, -r, 1/2" + padlab + ")", widen({1, -1, 0}), "0 0 1/2" + pad, {half}),
        pat("(r, r+1/2, 1/2" + padlab + ")", widen({1, 1, 0}), "0 1/2 1/2" + pad, {half}),
        pat("(r, r+1/2, 2r" + padlab + ")", widen({1, 1, 2}), "0 1/2 0" + pad, {half}),
    };
}

// (r, -r, 1/2, 1/2), (r, r+1/2, 1/2, 1/2), (r, r+1/2, 1/2, 2r): the c-sorted
// four-parameter versions used by the F4/FC and H4 tables.
std::vector<ParametricFamily> type1_cc_patterns(int extra_halves) {
    std::string pad, padlab;
    for (int i = 0; i < extra_halves; ++i) {
        pad += " 1/2";
        padlab += ", 1/2";
    }
    auto widen = [&](std::vector<long long> s) {
        for (int i = 0; i < extra_halves; ++i) s.push_back(0);
        return s;
    };
    return {
        pat("(r, -r, 1/2, 1/2" + padlab + ")", widen({1, -1, 0, 0}), "0 0 1/2 1/2" + pad,
            {half}),
        pat("(r, r+1/2, 1/2, 1/2" + padlab + ")", widen({1, 1, 0, 0}), "0 1/2 1/2 1/2" + pad,
            {half}),
        pat("(r, r+1/2, 1/2, 2r" + padlab + ")", widen({1, 1, 0, 2}), "0 1/2 1/2 0" + pad,
            {half}),
    };
}

// FB parameters are (a1..an, b1..bn, c); the series is invariant under
// permuting the variable slots and, within each slot, under swapping a_i
// with b_i (both Pochhammer factors sit in the numerator). That gives
// n! * 2^n symmetries; the published theorem lists only the four generated
// by the slot swap and the global a<->b swap, which undercounts orbits.
std::vector<std::vector<int>> fb_symmetries(int n) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::vector<std::vector<int>> out;
    do {
        for (int flips = 0; flips < (1 << n); ++flips) {
            std::vector<int> perm(2 * n + 1);
            for (int i = 0; i < n; ++i) {
                bool flip = flips & (1 << i);
                perm[i] = flip ? n + sigma[i] : sigma[i];
                perm[n + i] = flip ? sigma[i] : n + sigma[i];
            }
            perm[2 * n] = 2 * n;
            bool identity = true;
            for (size_t i = 0; i < perm.size(); ++i)
                identity = identity && perm[i] == static_cast<int>(i);
            if (!identity) out.push_back(perm);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<std::vector<int>> fc_symmetries(int n, bool with_ab_swap) {
    // Permutations of the c block (positions 2..n+1), optionally joined with
    // the (a, b) swap.
    std::vector<int> cperm(n);
    for (int i = 0; i < n; ++i) cperm[i] = 2 + i;
    std::vector<std::vector<int>> out;
    do {
        for (int ab = 0; ab < (with_ab_swap ? 2 : 1); ++ab) {
            std::vector<int> perm(n + 2);
            perm[0] = ab ? 1 : 0;
            perm[1] = ab ? 0 : 1;
            for (int i = 0; i < n; ++i) perm[2 + i] = cperm[i];
            bool identity = true;
            for (int i = 0; i < n + 2; ++i) identity = identity && perm[i] == i;
            if (!identity) out.push_back(perm);
        }
    } while (std::next_permutation(cperm.begin(), cperm.end()));
    return out;
}

std::map<std::string, ReferenceTable> build_tables() {
    std::map<std::string, ReferenceTable> t;
    auto add = [&](std::string id, Family fam, int n, std::vector<ParametricFamily> fams,
                   std::vector<std::string> reps, std::vector<std::vector<int>> syms,
                   std::vector<std::string> duplicates = {}) {
        ReferenceTable tab;
        tab.id = id;
        tab.fam = fam;
        tab.n = n;
        tab.families = std::move(fams);
        tab.representatives = tuples(reps);
        tab.duplicate_rows = tuples(duplicates);
        tab.symmetries = std::move(syms);
        t.emplace(std::move(id), std::move(tab));
    };

    // Irreducible algebraic Gauss triples: type-1 families + the 40 smallest
    // orbit-pair representatives of the 408 sporadic triples.
    add("table2", Family::Gauss, 0, type1_padded(0),
        {
            "1/2 1/6 1/3",   "1/4 3/4 1/3",   "1/4 7/12 1/2",  "1/4 7/12 1/3",
            "1/6 5/6 1/3",   "1/6 5/6 1/4",   "1/6 5/6 1/5",   "1/6 5/12 1/3",
            "1/6 5/12 1/4",  "1/6 11/30 1/3", "1/6 11/30 1/5", "1/10 3/10 1/5",
            "1/10 9/10 1/3", "1/10 9/10 1/5", "1/10 13/30 1/3", "1/10 13/30 1/5",
            "1/12 5/12 1/4", "1/12 7/12 1/3", "1/15 7/15 1/3", "1/15 7/15 1/5",
            "1/15 11/15 1/5", "1/15 11/15 3/5", "1/20 11/20 1/5", "1/20 11/20 2/5",
            "1/20 13/20 1/2", "1/20 13/20 1/5", "1/24 13/24 1/3", "1/24 13/24 1/4",
            "1/24 17/24 1/2", "1/24 17/24 1/4", "1/24 19/24 1/2", "1/24 19/24 1/3",
            "1/30 11/30 1/5", "1/30 19/30 1/3", "1/60 31/60 1/3", "1/60 31/60 1/5",
            "1/60 41/60 1/2", "1/60 41/60 1/5", "1/60 49/60 1/2", "1/60 49/60 1/3",
        },
        {{1, 0, 2}});

    // Appell F4 = FC at n=2. Four of the 44 published rows are conjugation +
    // swap duplicates of other rows ((1/10,7/10,2/5,2/5) of (1/10,3/10,1/5,1/5),
    // (1/15,13/15,1/3,3/5) of (1/15,7/15,1/3,1/5), (1/20,17/20,1/2,1/2) of
    // (1/20,13/20,1/2,1/2) and (1/20,17/20,1/2,2/5) of (1/20,13/20,1/2,1/5));
    // they are kept as flagged duplicates.
    add("table3", Family::FC, 2, type1_cc_patterns(0),
        {
            "1/2 1/6 1/3 1/3",    "1/4 3/4 1/2 1/3",    "1/4 3/4 1/3 2/3",
            "1/4 7/12 1/2 1/2",   "1/4 7/12 1/2 1/3",   "1/6 5/6 1/3 2/3",
            "1/6 5/6 1/4 3/4",    "1/6 5/6 1/5 4/5",    "1/6 5/12 1/3 1/4",
            "1/6 11/30 1/3 1/5",  "1/10 3/10 1/5 1/5",
            "1/10 9/10 1/3 2/3",  "1/10 9/10 1/5 4/5",  "1/10 13/30 1/3 1/5",
            "1/12 5/12 1/4 1/4",  "1/12 7/12 1/2 1/3",  "1/12 7/12 1/3 1/3",
            "1/15 7/15 1/3 1/5",  "1/15 11/15 1/5 3/5",
            "1/20 11/20 1/2 1/5", "1/20 11/20 1/2 2/5", "1/20 11/20 1/5 2/5",
            "1/20 13/20 1/2 1/2", "1/20 13/20 1/2 1/5",
            "1/24 13/24 1/2 1/3", "1/24 13/24 1/2 1/4",
            "1/24 13/24 1/3 1/4", "1/24 17/24 1/2 1/2", "1/24 17/24 1/2 1/4",
            "1/24 19/24 1/2 1/2", "1/24 19/24 1/2 1/3", "1/30 11/30 1/5 1/5",
            "1/30 19/30 1/3 1/3", "1/60 31/60 1/2 1/3", "1/60 31/60 1/2 1/5",
            "1/60 31/60 1/3 1/5", "1/60 41/60 1/2 1/2", "1/60 41/60 1/2 1/5",
            "1/60 49/60 1/2 1/2", "1/60 49/60 1/2 1/3",
        },
        fc_symmetries(2, true),
        {
            "1/10 7/10 2/5 2/5", "1/15 13/15 1/3 3/5", "1/20 17/20 1/2 1/2",
            "1/20 17/20 1/2 2/5",
        });

    // Lauricella FC at n=3: the published rows are (a, b, c1, c2) with a third
    // c equal to 1/2; stored here with the c block in canonical fraction
    // order (1/2 sorts first), which permutes c's within each row.
    add("table4", Family::FC, 3, type1_cc_patterns(1),
        {
            "1/4 3/4 1/2 1/2 1/3",    "1/4 3/4 1/2 1/3 2/3",    "1/4 7/12 1/2 1/2 1/2",
            "1/4 7/12 1/2 1/2 1/3",   "1/12 7/12 1/2 1/2 1/3",  "1/12 7/12 1/2 1/3 1/3",
            "1/20 11/20 1/2 1/2 1/5", "1/20 11/20 1/2 1/2 2/5", "1/20 11/20 1/2 1/5 2/5",
            "1/20 13/20 1/2 1/2 1/2", "1/20 13/20 1/2 1/2 1/5", "1/24 13/24 1/2 1/2 1/3",
            "1/24 13/24 1/2 1/2 1/4", "1/24 13/24 1/2 1/3 1/4", "1/24 17/24 1/2 1/2 1/2",
            "1/24 17/24 1/2 1/2 1/4", "1/24 19/24 1/2 1/2 1/2", "1/24 19/24 1/2 1/2 1/3",
            "1/60 31/60 1/2 1/2 1/3", "1/60 31/60 1/2 1/2 1/5", "1/60 31/60 1/2 1/3 1/5",
            "1/60 41/60 1/2 1/2 1/2", "1/60 41/60 1/2 1/2 1/5", "1/60 49/60 1/2 1/2 1/2",
            "1/60 49/60 1/2 1/2 1/3",
        },
        fc_symmetries(3, true));

    // Horn H4.
    add("table5", Family::H4, 0, type1_cc_patterns(0),
        {
            "1/2 1/6 1/2 1/3",    "1/2 1/6 1/3 1/3",    "1/4 3/4 1/2 1/3",
            "1/4 7/12 1/2 1/2",   "1/4 7/12 1/2 1/3",   "1/6 1/2 1/2 1/3",
            "1/6 5/6 1/2 1/3",    "1/6 5/6 1/2 2/3",    "1/6 5/6 1/2 1/4",
            "1/6 5/6 1/2 1/5",    "1/6 5/6 1/3 2/3",    "1/6 5/12 1/2 1/3",
            "1/6 5/12 1/2 1/4",   "1/6 11/30 1/2 1/3",  "1/6 11/30 1/2 1/5",
            "1/10 3/10 1/2 1/5",  "1/10 7/10 1/2 2/5",  "1/10 7/10 2/5 2/5",
            "1/10 9/10 1/2 1/3",  "1/10 9/10 1/2 1/5",  "1/10 9/10 1/2 4/5",
            "1/10 9/10 1/5 4/5",  "1/10 13/30 1/2 1/3", "1/10 13/30 1/2 1/5",
            "1/12 3/4 1/2 1/2",   "1/12 3/4 1/2 1/3",   "1/12 3/4 1/3 1/2",
            "1/12 5/6 1/2 2/3",   "1/12 5/6 1/2 1/4",   "1/12 5/6 1/4 2/3",
            "1/12 5/12 1/2 1/4",  "1/12 7/12 1/2 1/3",  "1/12 7/12 1/3 1/2",
            "1/12 11/12 1/3 1/2", "1/15 7/15 1/2 1/3",  "1/15 7/15 1/2 1/5",
            "1/15 11/15 1/2 1/5", "1/15 11/15 1/2 3/5", "1/15 13/15 1/2 1/3",
            "1/15 13/15 1/2 3/5", "1/20 11/20 1/2 1/5", "1/20 11/20 1/2 2/5",
            "1/20 13/20 1/2 1/2", "1/20 13/20 1/2 1/5", "1/20 17/20 1/2 1/2",
            "1/20 17/20 1/2 2/5", "1/24 13/24 1/2 1/3", "1/24 13/24 1/2 1/4",
            "1/24 17/24 1/2 1/2", "1/24 17/24 1/2 1/4", "1/24 19/24 1/2 1/2",
            "1/24 19/24 1/2 1/3", "1/30 5/6 1/2 2/3",   "1/30 5/6 1/2 1/5",
            "1/30 5/6 1/5 2/3",   "1/30 7/10 1/2 1/3",  "1/30 7/10 1/2 2/5",
            "1/30 7/10 1/3 2/5",  "1/30 11/30 1/2 1/5", "1/30 19/30 1/2 1/3",
            "1/60 31/60 1/2 1/3", "1/60 31/60 1/2 1/5", "1/60 41/60 1/2 1/2",
            "1/60 41/60 1/2 1/5", "1/60 49/60 1/2 1/2", "1/60 49/60 1/2 1/3",
        },
        {});

    // Horn H7 (symmetric in b and c).
    add("table6", Family::H7, 0,
        {
            pat("(1/2, r, -r, 1/2)", {0, 1, -1, 0}, "1/2 0 0 1/2", {half}),
            pat("(1/2, r, r+1/2, 1/2)", {0, 1, 1, 0}, "1/2 0 1/2 1/2", {half}),
            pat("(-2r, r, r+1/2, 1/2)", {-2, 1, 1, 0}, "0 0 1/2 1/2", {half}),
        },
        {
            "1/2 1/4 7/12 1/2",   "1/2 1/12 7/12 1/3",  "1/2 1/20 13/20 1/2",
            "1/2 1/24 17/24 1/2", "1/2 1/24 19/24 1/2", "1/2 1/60 41/60 1/2",
            "1/2 1/60 49/60 1/2", "1/3 1/2 5/6 1/2",    "1/3 1/4 3/4 1/2",
            "1/3 1/4 3/4 1/3",    "1/3 1/4 11/12 1/2",  "1/3 1/6 5/6 1/2",
            "1/3 1/6 5/6 1/3",    "1/3 5/6 1/12 1/2",   "1/3 5/6 1/30 1/2",
            "1/3 1/10 9/10 1/2",  "1/3 1/10 9/10 1/3",  "1/3 1/10 23/30 1/2",
            "1/3 5/12 11/12 1/2", "1/3 2/15 11/15 1/2", "1/3 5/24 17/24 1/2",
            "1/3 5/24 23/24 1/2", "1/3 11/30 29/30 1/2", "1/3 11/60 41/60 1/2",
            "1/3 11/60 59/60 1/2", "1/4 1/6 5/6 1/2",   "1/4 1/6 5/6 1/4",
            "1/4 1/6 11/12 1/2",  "1/4 7/12 11/12 1/2", "1/4 7/24 19/24 1/2",
            "1/4 7/24 23/24 1/2", "1/5 1/6 5/6 1/2",    "1/5 1/6 5/6 1/5",
            "1/5 1/6 29/30 1/2",  "1/5 1/10 9/10 1/2",  "1/5 1/10 9/10 1/5",
            "1/5 7/10 9/10 1/2",  "1/5 9/10 7/30 1/2",  "1/5 4/15 13/15 1/2",
            "1/5 4/15 14/15 1/2", "1/5 8/15 13/15 1/2", "1/5 7/20 17/20 1/2",
            "1/5 7/20 19/20 1/2", "1/5 9/20 19/20 1/2", "1/5 19/30 29/30 1/2",
            "1/5 19/60 49/60 1/2", "1/5 19/60 59/60 1/2", "1/6 5/12 11/12 1/3",
        },
        {{0, 2, 1, 3}});

    // Appell F1 = FD at n=2: the five +- pairs (closure under conjugation).
    add("thm_F1", Family::FD, 2, {},
        {
            "1/3 5/6 5/6 1/2", "1/6 2/3 5/6 1/3", "1/6 5/6 2/3 1/3",
            "1/6 5/6 5/6 1/2", "1/6 5/6 5/6 1/3",
        },
        {});

    add("thm_FD3", Family::FD, 3, {}, {"1/6 5/6 5/6 5/6 1/3"}, {});
    add("thm_FD4", Family::FD, 4, {}, {}, {});
    add("thm_FD5", Family::FD, 5, {}, {}, {});

    // Appell F2 = FA at n=2 (up to the simultaneous (b1,c1)<->(b2,c2) swap).
    add("thm_F2", Family::FA, 2, {},
        {
            "1/2 1/6 5/6 1/3 2/3",    "1/6 5/6 5/6 2/3 2/3",  "1/10 7/10 9/10 2/5 4/5",
            "1/12 3/4 5/6 1/2 2/3",   "1/12 5/6 11/12 2/3 1/2", "1/12 5/6 7/12 2/3 1/2",
            "1/30 5/6 7/10 2/3 2/5",
        },
        {{0, 2, 1, 4, 3}});

    add("thm_FA3", Family::FA, 3, {}, {}, {});
    add("thm_FA4", Family::FA, 4, {}, {}, {});

    // Appell F3 = FB at n=2 (up to the four parameter symmetries).
    add("thm_F3", Family::FB, 2, {},
        {
            "1/4 1/6 3/4 5/6 1/2", "1/6 1/6 5/6 5/6 1/2", "1/6 1/10 5/6 9/10 1/2",
            "1/6 1/12 5/6 7/12 1/3", "1/10 3/10 9/10 7/10 1/2",
        },
        fb_symmetries(2));

    add("thm_FB3", Family::FB, 3, {}, {}, {});
    add("thm_FB4", Family::FB, 4, {}, {}, {});

    add("thm_G1", Family::G1, 0, {}, {"1/6 1/2 2/3", "1/6 2/3 1/2", "1/6 2/3 2/3"}, {});
    add("thm_G2", Family::G2, 0, {},
        {"1/3 1/6 1/2 2/3", "1/6 1/6 1/2 2/3", "1/6 1/6 2/3 2/3"}, {{1, 0, 3, 2}});
    add("thm_G3", Family::G3, 0, {pat("(r, -r)", {1, -1}, "0 0", {})},
        {"1/2 1/3", "1/3 1/2"}, {});

    // The published list shows three +- pairs, but (1/4, 11/12, 1/6, 1/2) is
    // the k=5 conjugate of (1/4, 7/12, 5/6, 1/2): the six tuples split into
    // two conjugation classes.
    add("thm_H1", Family::H1, 0, {},
        {"1/3 5/6 1/2 2/3", "1/4 7/12 5/6 1/2"}, {});
    add("thm_H2", Family::H2, 0, {},
        {
            "1/2 1/6 5/12 11/12 1/3", "1/3 5/6 1/4 3/4 2/3", "1/3 5/6 1/6 5/6 2/3",
            "1/3 5/6 1/10 9/10 2/3",  "1/4 3/4 1/6 5/6 1/2", "1/4 7/12 1/6 5/6 1/2",
            "1/5 7/10 1/6 5/6 2/5",   "1/5 7/10 1/10 9/10 2/5", "1/6 5/6 5/12 11/12 2/3",
        },
        {{0, 1, 3, 2, 4}});
    add("thm_H3", Family::H3, 0, {},
        {"1/3 5/6 1/2", "1/6 2/3 1/3", "1/6 5/6 1/3"}, {});
    add("thm_H5", Family::H5, 0, {pat("(r, -r, 1/2)", {1, -1, 0}, "0 0 1/2", {half})},
        {"1/6 1/2 1/3", "1/6 2/3 1/3", "1/6 5/6 1/3", "1/10 3/5 1/5", "1/12 3/4 1/2"},
        {});
    add("thm_H6", Family::H6, 0, {},
        {"1/2 1/3 2/3", "1/2 1/3 5/6", "1/3 1/2 5/6"}, {});

    return t;
}

const std::map<std::string, ReferenceTable>& tables() {
    static const std::map<std::string, ReferenceTable> t = build_tables();
    return t;
}

} // namespace

const ReferenceTable& reference_table(const std::string& id) {
    auto it = tables().find(id);
    if (it == tables().end()) throw InputError("unknown reference table '" + id + "'");
    return it->second;
}

std::vector<std::string> all_reference_table_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, tab] : tables()) ids.push_back(id);
    return ids;
}

std::string reference_table_id(Family fam, int n) {
    for (const auto& [id, tab] : tables())
        if (tab.fam == fam && (!family_is_lauricella(fam) || tab.n == n)) return id;
    return "";
}

std::vector<ParametricFamily> gauss_type1_patterns() { return type1_padded(0); }

std::vector<ParametricFamily> solution_family_patterns(Family fam, int n) {
    switch (fam) {
    case Family::Gauss: return type1_padded(0);
    case Family::FC:
        if (n == 1) return type1_padded(0);
        return type1_cc_patterns(n - 2);
    case Family::H4: return type1_cc_patterns(0);
    case Family::H7: return reference_table("table6").families;
    case Family::H5: return reference_table("thm_H5").families;
    case Family::G3: return reference_table("thm_G3").families;
    case Family::FD:
    case Family::FA:
    case Family::FB:
        if (n == 1) return type1_padded(0);
        return {};
    default: return {};
    }
}

std::vector<std::vector<int>> family_symmetries(Family fam, int n) {
    switch (fam) {
    case Family::Gauss: return {{1, 0, 2}};
    case Family::FA:
        if (n == 2) return {{0, 2, 1, 4, 3}};
        return {};
    case Family::FB: return fb_symmetries(n);
    case Family::FC: return fc_symmetries(n, true);
    case Family::G2: return {{1, 0, 3, 2}};
    case Family::H2: return {{0, 1, 3, 2, 4}};
    case Family::H7: return {{0, 2, 1, 3}};
    default: return {};
    }
}

std::vector<std::vector<int>> display_symmetries(Family fam, int n) {
    return family_symmetries(fam, n);
}

} // namespace hyperclass
