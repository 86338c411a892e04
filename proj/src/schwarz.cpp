#include "hyperclass/schwarz.hpp"

#include <algorithm>

#include "hyperclass/apex.hpp"

namespace hyperclass {

namespace {

Rat q(long long n, long long d) { return Rat(n, d); }

bool triple_less(const GaussTriple& a, const GaussTriple& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] != b[i]) return frac_order_less(a[i], b[i]);
    }
    return false;
}

} // namespace

const std::vector<GaussTriple>& schwarz_lmn_tuples() {
    static const std::vector<GaussTriple> tuples = {
        {q(1, 2), q(1, 3), q(1, 3)}, {q(1, 2), q(1, 3), q(1, 4)},
        {q(1, 2), q(1, 3), q(1, 5)}, {q(1, 2), q(2, 5), q(1, 3)},
        {q(1, 2), q(2, 5), q(1, 5)}, {q(2, 3), q(1, 3), q(1, 3)},
        {q(2, 3), q(1, 3), q(1, 5)}, {q(2, 3), q(1, 4), q(1, 4)},
        {q(2, 3), q(1, 5), q(1, 5)}, {q(2, 5), q(1, 3), q(1, 3)},
        {q(2, 5), q(2, 5), q(2, 5)}, {q(3, 5), q(1, 3), q(1, 5)},
        {q(3, 5), q(2, 5), q(1, 3)}, {q(4, 5), q(1, 5), q(1, 5)},
    };
    return tuples;
}

const std::set<GaussTriple>& type2_triples() {
    static const std::set<GaussTriple> cache = [] {
        std::set<GaussTriple> out;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& lmn : schwarz_lmn_tuples()) {
            for (const auto& p : perms) {
                for (int signs = 0; signs < 8; ++signs) {
                    Rat l = lmn[p[0]] * ((signs & 1) ? -1 : 1);
                    Rat m = lmn[p[1]] * ((signs & 2) ? -1 : 1);
                    Rat n = lmn[p[2]] * ((signs & 4) ? -1 : 1);
                    Rat a = (Rat(1) - l - m - n) / 2;
                    Rat b = (Rat(1) - l - m + n) / 2;
                    Rat c = Rat(1) - l;
                    out.insert({frac(a), frac(b), frac(c)});
                }
            }
        }
        return out;
    }();
    return cache;
}

bool matches_type1_form(Type1Form form, const Rat& r, const GaussTriple& t) {
    Rat a = frac(t[0]), b = frac(t[1]), c = frac(t[2]);
    Rat fr = frac(r);
    if (fr == 0 || fr == Rat(1, 2)) return false;
    switch (form) {
    case Type1Form::MinusR:
        return a == fr && b == frac(-fr) && c == Rat(1, 2);
    case Type1Form::RPlusHalfHalf:
        return a == fr && b == frac(fr + Rat(1, 2)) && c == Rat(1, 2);
    case Type1Form::RPlusHalfTwoR:
        return a == fr && b == frac(fr + Rat(1, 2)) && c == frac(2 * fr);
    }
    return false;
}

GaussClassification gauss_triple_classify(const Rat& a_in, const Rat& b_in, const Rat& c_in) {
    GaussTriple t{frac(a_in), frac(b_in), frac(c_in)};
    GaussTriple swapped{t[1], t[0], t[2]};
    for (Type1Form form :
         {Type1Form::MinusR, Type1Form::RPlusHalfHalf, Type1Form::RPlusHalfTwoR}) {
        for (const GaussTriple& cand : {t, swapped}) {
            // The first coordinate of a matched form is r itself.
            if (matches_type1_form(form, cand[0], cand)) {
                GaussClassification out;
                out.kind = GaussClassification::Type1;
                out.form = form;
                out.r = cand[0];
                return out;
            }
        }
    }
    GaussClassification out;
    out.kind = type2_triples().count(t) ? GaussClassification::Type2
                                        : GaussClassification::NotAlgebraic;
    return out;
}

bool gauss_is_algebraic(const Rat& a_in, const Rat& b_in, const Rat& c_in) {
    Rat a = frac(a_in), b = frac(b_in), c = frac(c_in);
    if (is_integer(a) || is_integer(b) || is_integer(c - a) || is_integer(c - b))
        throw InputError("gauss_is_algebraic: reducible parameters");
    long long D = common_denominator({a, b, c});
    for (long long k = 1; k < std::max(D, 2LL); ++k) {
        if (gcd_ll(k, D) != 1) continue;
        Rat ka = frac(Rat(k) * a), kb = frac(Rat(k) * b), kc = frac(Rat(k) * c);
        bool ok = (ka <= kc && kc < kb) || (kb <= kc && kc < ka);
        if (!ok) return false;
    }
    return true;
}

std::vector<GaussTriple> type2_orbit_pair_representatives() {
    std::set<GaussTriple> remaining = type2_triples();
    std::vector<GaussTriple> reps;
    while (!remaining.empty()) {
        GaussTriple seed = *remaining.begin();
        std::set<GaussTriple> cls;
        for (const auto& base : {seed, GaussTriple{seed[1], seed[0], seed[2]}}) {
            for (const auto& conj : conjugation_orbit({base[0], base[1], base[2]}))
                cls.insert({conj[0], conj[1], conj[2]});
        }
        GaussTriple best = *cls.begin();
        for (const auto& t : cls) {
            if (triple_less(t, best)) best = t;
            remaining.erase(t);
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(), triple_less);
    return reps;
}

} // namespace hyperclass
