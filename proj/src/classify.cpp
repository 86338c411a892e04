#include "hyperclass/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hyperclass/apex.hpp"
#include "hyperclass/parallel.hpp"
#include "hyperclass/tables.hpp"

namespace hyperclass {

std::vector<Rat> ParametricFamily::at(const Rat& r) const {
    std::vector<Rat> t(slope.size());
    for (size_t i = 0; i < slope.size(); ++i) t[i] = frac(Rat(slope[i]) * r + offset[i]);
    return t;
}

bool ParametricFamily::admissible(const Rat& r) const {
    if (!(r > 0 && r < 1)) return false;
    for (const Rat& x : excluded_r)
        if (r == x) return false;
    return true;
}

bool ParametricFamily::matches(const std::vector<Rat>& t) const {
    if (t.size() != slope.size()) return false;
    size_t pivot = 0;
    while (pivot < slope.size() && slope[pivot] == 0) ++pivot;
    if (pivot == slope.size()) return false;
    long long s = slope[pivot];
    long long m = s < 0 ? -s : s;
    // Solve slope * r = t - offset (mod Z) from the pivot coordinate, one
    // candidate r per residue class.
    for (long long j = 0; j < m; ++j) {
        Rat r = frac((frac(t[pivot]) - offset[pivot] + j) / s);
        if (!admissible(r)) continue;
        if (at(r) == frac_tuple(t)) return true;
    }
    return false;
}

namespace {

using Tuple = std::vector<Rat>;

Tuple permuted(const Tuple& t, const std::vector<int>& perm) {
    Tuple out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = t[perm[i]];
    return out;
}

// Closure under conjugation and the given parameter permutations.
std::set<Tuple> closure(std::set<Tuple> s, const std::vector<std::vector<int>>& syms) {
    std::vector<Tuple> queue(s.begin(), s.end());
    while (!queue.empty()) {
        Tuple t = std::move(queue.back());
        queue.pop_back();
        std::vector<Tuple> next = conjugation_orbit(t);
        for (const auto& perm : syms) next.push_back(permuted(t, perm));
        for (auto& u : next)
            if (s.insert(u).second) queue.push_back(u);
    }
    return s;
}

// All p/q in (0,1) with q <= maxq.
std::vector<Rat> proper_fractions(long long maxq) {
    std::set<Rat> out;
    for (long long q = 2; q <= maxq; ++q)
        for (long long p = 1; p < q; ++p)
            if (gcd_ll(p, q) == 1) out.insert(Rat(p, q));
    return {out.begin(), out.end()};
}

// Scan values for the free parameter of a type-1 triple: the proofs bound its
// denominator by 60 in general and by 120 when it is 2 mod 4.
const std::vector<Rat>& type1_scan_values() {
    static const std::vector<Rat> vals = [] {
        std::vector<Rat> out = proper_fractions(60);
        for (long long q = 62; q <= 120; q += 4)
            for (long long p = 1; p < q; ++p)
                if (gcd_ll(p, q) == 1) out.push_back(Rat(p, q));
        return out;
    }();
    return vals;
}

// Exact filter: keep the candidates that are non-resonant with maximal
// signature at every conjugate.
std::set<Tuple> filter_algebraic(Family fam, int n, const std::vector<Tuple>& raw) {
    const GkzSystem& sys = family_system(fam, n);
    std::set<Tuple> dedup;
    for (const auto& t : raw) dedup.insert(frac_tuple(t));
    std::vector<Tuple> cands(dedup.begin(), dedup.end());
    std::vector<char> keep = parallel_map(cands, [&](const Tuple& t) -> char {
        std::vector<Rat> alpha = frac_tuple(alpha_from_classical(fam, n, t));
        if (!is_nonresonant(sys, alpha)) return 0;
        return is_algebraic(sys, alpha) ? 1 : 0;
    });
    std::set<Tuple> out;
    for (size_t i = 0; i < cands.size(); ++i)
        if (keep[i]) out.insert(cands[i]);
    return out;
}

void drop_family_instances(std::set<Tuple>& s, const std::vector<ParametricFamily>& fams,
                           const std::vector<std::vector<int>>& syms) {
    for (auto it = s.begin(); it != s.end();) {
        std::vector<Tuple> images{*it};
        for (const auto& perm : syms) images.push_back(permuted(*it, perm));
        bool inst = false;
        for (const auto& img : images)
            for (const auto& f : fams) inst = inst || f.matches(img);
        it = inst ? s.erase(it) : ++it;
    }
}

SolutionSet make_set(Family fam, int n, std::set<Tuple> sporadic) {
    SolutionSet s;
    s.fam = fam;
    s.n = n;
    s.families = solution_family_patterns(fam, n);
    s.symmetries = family_symmetries(fam, n);
    s.display_symmetries = display_symmetries(fam, n);
    drop_family_instances(sporadic, s.families, s.symmetries);
    // Solution sets are invariant under conjugation and under the parameter
    // symmetries (the point configurations are invariant under the matching
    // coordinate permutations), so close the generated set under both.
    s.sporadic = closure(std::move(sporadic), s.symmetries);
    return s;
}

// c values making (a, b, c) a type-1 triple.
std::vector<Rat> type1_c_options(const Rat& a, const Rat& b) {
    std::vector<Rat> out;
    if (frac(a + b) == 0) out.push_back(Rat(1, 2));
    if (frac(b - a) == Rat(1, 2)) {
        out.push_back(Rat(1, 2));
        out.push_back(frac(2 * a));
        out.push_back(frac(2 * b));
    }
    return out;
}

struct Type2Index {
    std::map<std::pair<Rat, Rat>, std::vector<Rat>> by_ab; // (a,b) -> c's
    std::map<std::pair<Rat, Rat>, std::vector<Rat>> by_ac; // (a,c) -> b's
    std::map<Rat, std::vector<std::pair<Rat, Rat>>> by_a;  // a -> (b,c)'s
    Type2Index() {
        for (const auto& t : type2_triples()) {
            by_ab[{t[0], t[1]}].push_back(t[2]);
            by_ac[{t[0], t[2]}].push_back(t[1]);
            by_a[t[0]].push_back({t[1], t[2]});
        }
    }
};
const Type2Index& type2_index() {
    static const Type2Index idx;
    return idx;
}

// All c making (a, b, c) an irreducible algebraic Gauss triple.
std::vector<Rat> gauss_c_options(const Rat& a, const Rat& b) {
    std::vector<Rat> out = type1_c_options(a, b);
    auto it = type2_index().by_ab.find({frac(a), frac(b)});
    if (it != type2_index().by_ab.end())
        out.insert(out.end(), it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const Rat half(1, 2);

// ---------------------------------------------------------------- drivers --

SolutionSet classify_gauss(Family fam, int n) {
    std::set<Tuple> sporadic;
    for (const auto& t : type2_triples()) sporadic.insert({t[0], t[1], t[2]});
    return make_set(fam, n, std::move(sporadic));
}

// Appell F1: (a,b1,c), (a,b2,c) and (a,b1+b2,c) must be Gauss triples.
SolutionSet classify_f1() {
    std::vector<Tuple> cands;
    for (const Rat& r : type1_scan_values()) {
        if (r == half) continue;
        Rat mr = frac(-r), rh = frac(r + half), twor = frac(2 * r);
        for (const Rat& b1 : {mr, rh})
            for (const Rat& b2 : {mr, rh}) cands.push_back({r, b1, b2, half});
        cands.push_back({r, rh, rh, twor});
    }
    for (const auto& t : type2_triples()) {
        std::vector<Rat> b_options;
        if (t[2] == half) {
            b_options.push_back(frac(-t[0]));
            b_options.push_back(frac(t[0] + half));
        }
        if (t[2] == frac(2 * t[0])) b_options.push_back(frac(t[0] + half));
        for (const Rat& b : b_options) {
            cands.push_back({t[0], b, t[1], t[2]});
            cands.push_back({t[0], t[1], b, t[2]});
        }
    }
    for (const auto& [ac, bs] : type2_index().by_ac)
        for (const Rat& b1 : bs)
            for (const Rat& b2 : bs) cands.push_back({ac.first, b1, b2, ac.second});
    return make_set(Family::FD, 2, filter_algebraic(Family::FD, 2, cands));
}

// Lauricella FD for n >= 3: every b-drop must solve the (n-1)-variable case.
SolutionSet classify_fd(int n, const SolutionSet& prev) {
    std::map<std::pair<Rat, Rat>, std::set<Tuple>> sub; // (a,c) -> b-vectors
    for (const auto& t : prev.sporadic)
        sub[{t.front(), t.back()}].insert(Tuple(t.begin() + 1, t.end() - 1));
    std::vector<Tuple> cands;
    for (const auto& [ac, bs] : sub) {
        std::set<Rat> values;
        for (const auto& b : bs) values.insert(b.begin(), b.end());
        std::vector<Rat> vals(values.begin(), values.end());
        if (vals.empty()) continue;
        std::vector<int> idx(n, 0);
        while (true) {
            Tuple b(n);
            for (int i = 0; i < n; ++i) b[i] = vals[idx[i]];
            bool ok = true;
            for (int drop = 0; drop < n && ok; ++drop) {
                Tuple rest;
                for (int i = 0; i < n; ++i)
                    if (i != drop) rest.push_back(b[i]);
                ok = sub[ac].count(rest) > 0;
            }
            if (ok) {
                Tuple t{ac.first};
                t.insert(t.end(), b.begin(), b.end());
                t.push_back(ac.second);
                cands.push_back(std::move(t));
            }
            int k = n - 1;
            while (k >= 0 && idx[k] + 1 == static_cast<int>(vals.size())) idx[k--] = 0;
            if (k < 0) break;
            ++idx[k];
        }
    }
    return make_set(Family::FD, n, filter_algebraic(Family::FD, n, cands));
}

// Appell F2: (a,b1,c1), (a,b2,c2) and (a-c2,b1,c1) must be Gauss triples.
SolutionSet classify_f2() {
    std::vector<Tuple> cands;
    for (const Rat& r : type1_scan_values()) {
        if (r == half) continue;
        Rat mr = frac(-r), rh = frac(r + half), twor = frac(2 * r);
        std::vector<std::pair<Rat, Rat>> bc = {{mr, half}, {rh, half}, {rh, twor}};
        for (const auto& [b1, c1] : bc)
            for (const auto& [b2, c2] : bc) cands.push_back({r, b1, b2, c1, c2});
    }
    for (const auto& t : type2_triples()) {
        Rat mr = frac(-t[0]), rh = frac(t[0] + half), twor = frac(2 * t[0]);
        for (const auto& [b, c] :
             std::vector<std::pair<Rat, Rat>>{{mr, half}, {rh, half}, {rh, twor}}) {
            cands.push_back({t[0], b, t[1], c, t[2]});
            cands.push_back({t[0], t[1], b, t[2], c});
        }
    }
    for (const auto& [a, bcs] : type2_index().by_a)
        for (const auto& [b1, c1] : bcs)
            for (const auto& [b2, c2] : bcs) cands.push_back({a, b1, b2, c1, c2});
    return make_set(Family::FA, 2, filter_algebraic(Family::FA, 2, cands));
}

// Lauricella FA at n = 3: every induced pair must solve the Appell F2 case.
SolutionSet classify_fa3(const SolutionSet& f2) {
    std::map<Rat, std::set<std::pair<Rat, Rat>>> nodes;
    std::map<Rat, std::set<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>>> edges;
    for (const auto& t : f2.sporadic) {
        std::pair<Rat, Rat> u{t[1], t[3]}, v{t[2], t[4]};
        nodes[t[0]].insert(u);
        nodes[t[0]].insert(v);
        edges[t[0]].insert({u, v});
    }
    std::vector<Tuple> cands;
    for (const auto& [a, ns] : nodes) {
        std::vector<std::pair<Rat, Rat>> list(ns.begin(), ns.end());
        auto has = [&](const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& v) {
            return edges[a].count({u, v}) > 0;
        };
        for (const auto& u : list)
            for (const auto& v : list)
                for (const auto& w : list) {
                    if (!has(u, v) || !has(u, w) || !has(v, w)) continue;
                    cands.push_back(
                        {a, u.first, v.first, w.first, u.second, v.second, w.second});
                }
    }
    return make_set(Family::FA, 3, filter_algebraic(Family::FA, 3, cands));
}

// Lauricella FA/FD above the last nonempty case: extending the empty solution
// set can only give the empty set, recorded as such.
SolutionSet classify_empty(Family fam, int n) { return make_set(fam, n, {}); }

// Appell F4: (a,b,c1) and (a,b,c2) must be Gauss triples.
SolutionSet classify_f4() {
    std::vector<Tuple> cands;
    for (const Rat& r : proper_fractions(12)) {
        if (r == half) continue;
        cands.push_back({r, frac(r + half), frac(2 * r), frac(2 * r)});
    }
    for (const auto& t : type2_triples()) {
        for (const Rat& c1 : type1_c_options(t[0], t[1])) {
            cands.push_back({t[0], t[1], c1, t[2]});
            cands.push_back({t[0], t[1], t[2], c1});
        }
    }
    for (const auto& [ab, cs] : type2_index().by_ab)
        for (const Rat& c1 : cs)
            for (const Rat& c2 : cs) cands.push_back({ab.first, ab.second, c1, c2});
    return make_set(Family::FC, 2, filter_algebraic(Family::FC, 2, cands));
}

// Lauricella FC for n >= 3: drop any c to reach the (n-1)-variable case, and
// complete with every c making (a, b, c) a Gauss triple.
SolutionSet classify_fc(int n, const SolutionSet& prev) {
    std::vector<Tuple> cands;
    for (const auto& t : prev.sporadic) {
        for (const Rat& c : gauss_c_options(t[0], t[1])) {
            Tuple u = t;
            u.push_back(c);
            cands.push_back(std::move(u));
        }
    }
    // Belt for the one shape whose first induced pair is a family instance:
    // (r, r+1/2, 1/2, 2r, 2r). Its (2r, 2r) pair is sporadic, so the
    // extension above already covers it; the direct scan keeps the
    // generation independent of that argument.
    if (n == 3) {
        for (const Rat& r : proper_fractions(12)) {
            if (r == half) continue;
            cands.push_back({r, frac(r + half), half, frac(2 * r), frac(2 * r)});
        }
    }
    return make_set(Family::FC, n, filter_algebraic(Family::FC, n, cands));
}

// Horn G1: (a, b_i, a+b1+b2) must be Gauss triples.
SolutionSet classify_g1() {
    std::vector<Tuple> cands;
    for (const Rat& r : proper_fractions(12)) {
        if (r == half) continue;
        cands.push_back({r, frac(-r), half});
        cands.push_back({r, frac(r + half), frac(-2 * r)});
        cands.push_back({r, frac(r + half), half});
    }
    for (const auto& t : type2_triples()) {
        Rat other = frac(t[2] - t[0] - t[1]);
        cands.push_back({t[0], t[1], other});
        cands.push_back({t[0], other, t[1]});
    }
    return make_set(Family::G1, 0, filter_algebraic(Family::G1, 0, cands));
}

// Horn G3: small grid (the interlacing argument bounds both denominators).
SolutionSet classify_g3() {
    std::vector<Rat> vals = proper_fractions(12);
    vals.push_back(Rat(0));
    std::vector<Tuple> cands;
    for (const Rat& a1 : vals)
        for (const Rat& a2 : vals) cands.push_back({a1, a2});
    return make_set(Family::G3, 0, filter_algebraic(Family::G3, 0, cands));
}

// Horn H1: (a,b,d) and (b-d,c,d-a) must be Gauss triples.
SolutionSet classify_h1() {
    auto c_options = [&](const Rat& b, const Rat& d, const Rat& a) {
        Rat x = frac(b - d), z = frac(d - a);
        std::vector<Rat> out;
        if (z == half) {
            out.push_back(frac(-x));
            out.push_back(frac(x + half));
        }
        if (z == frac(2 * x)) out.push_back(frac(x + half));
        auto it = type2_index().by_ac.find({x, z});
        if (it != type2_index().by_ac.end())
            out.insert(out.end(), it->second.begin(), it->second.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    std::vector<Tuple> cands;
    auto add = [&](const Rat& a, const Rat& b, const Rat& d) {
        for (const Rat& c : c_options(b, d, a)) cands.push_back({a, b, c, d});
    };
    for (const Rat& r : proper_fractions(12)) {
        if (r == half) continue;
        add(r, frac(-r), half);
        add(r, frac(r + half), half);
        add(r, frac(r + half), frac(2 * r));
    }
    for (const auto& t : type2_triples()) add(t[0], t[1], t[2]);
    return make_set(Family::H1, 0, filter_algebraic(Family::H1, 0, cands));
}

// Horn H4: (a/2,(a+1)/2,c), (a,b,d) and (b,a-2c,d) must be Gauss triples;
// the first forces c = 1/2 or c = a unless it is sporadic.
SolutionSet classify_h4() {
    std::vector<Tuple> cands;
    for (const Rat& r : type1_scan_values()) {
        if (r == half) continue;
        Rat mr = frac(-r), rh = frac(r + half), twor = frac(2 * r);
        for (const auto& [b, d] :
             std::vector<std::pair<Rat, Rat>>{{mr, half}, {rh, half}, {rh, twor}}) {
            cands.push_back({r, b, half, d});
            cands.push_back({r, b, r, d});
        }
    }
    for (const auto& t : type2_triples()) {
        cands.push_back({t[0], t[1], half, t[2]});
        cands.push_back({t[0], t[1], t[0], t[2]});
    }
    for (const auto& t : type2_triples()) {
        if (frac(t[1] - t[0]) != half) continue;
        Rat a = frac(2 * t[0]), c = t[2];
        Rat ma = frac(-a), ah = frac(a + half), twoa = frac(2 * a);
        for (const auto& [b, d] :
             std::vector<std::pair<Rat, Rat>>{{ma, half}, {ah, half}, {ah, twoa}})
            cands.push_back({a, b, c, d});
        auto it = type2_index().by_a.find(a);
        if (it != type2_index().by_a.end())
            for (const auto& [b, d] : it->second) cands.push_back({a, b, c, d});
    }
    return make_set(Family::H4, 0, filter_algebraic(Family::H4, 0, cands));
}

// Horn H5: (a,b,c) itself must be a Gauss triple.
SolutionSet classify_h5() {
    std::vector<Tuple> cands;
    for (const Rat& r : proper_fractions(12)) {
        if (r == half) continue;
        cands.push_back({r, frac(r + half), half});
        cands.push_back({r, frac(r + half), frac(2 * r)});
    }
    for (const auto& t : type2_triples()) cands.push_back({t[0], t[1], t[2]});
    return make_set(Family::H5, 0, filter_algebraic(Family::H5, 0, cands));
}

// Families defined by a linear isomorphism inherit their solutions through it.
SolutionSet classify_transported(Family dst, int n, const SolutionSet& src) {
    auto spec = transport_source(dst, n);
    if (!spec || spec->src != src.fam)
        throw Error("classify: " + family_name(dst) + " is not transported from " +
                    family_name(src.fam));
    std::set<Tuple> sporadic;
    for (const auto& t : src.sporadic) {
        std::vector<Rat> alpha = alpha_from_classical(src.fam, spec->src_n, t);
        std::vector<Rat> beta = apply_map(spec->f, alpha);
        sporadic.insert(frac_tuple(classical_from_alpha(dst, n, beta)));
    }
    return make_set(dst, n, std::move(sporadic));
}

} // namespace

std::vector<std::vector<std::vector<Rat>>> SolutionSet::orbits() const {
    std::set<Tuple> seen;
    std::vector<std::vector<Tuple>> out;
    for (const auto& t : sporadic) {
        if (seen.count(t)) continue;
        auto orb = conjugation_orbit(t);
        for (const auto& u : orb) seen.insert(u);
        out.push_back(orb);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Tuple ma = a.front(), mb = b.front();
        for (const auto& t : a)
            if (tuple_frac_less(t, ma)) ma = t;
        for (const auto& t : b)
            if (tuple_frac_less(t, mb)) mb = t;
        return tuple_frac_less(ma, mb);
    });
    return out;
}

std::vector<std::vector<Rat>> SolutionSet::representatives() const {
    std::set<Tuple> unvisited = sporadic;
    std::vector<Tuple> reps;
    while (!unvisited.empty()) {
        std::set<Tuple> cls = closure({*unvisited.begin()}, display_symmetries);
        Tuple best = *cls.begin();
        for (const auto& t : cls) {
            if (tuple_frac_less(t, best)) best = t;
            unvisited.erase(t);
        }
        reps.push_back(std::move(best));
    }
    std::sort(reps.begin(), reps.end(), tuple_frac_less);
    return reps;
}

long long SolutionSet::class_size(const std::vector<Rat>& rep) const {
    return static_cast<long long>(closure({frac_tuple(rep)}, display_symmetries).size());
}

SolutionSet classify_family(Family fam, int n, const ClassifyOptions& opts) {
    if (!family_is_lauricella(fam)) n = 0;
    static std::map<std::pair<Family, int>, SolutionSet> cache;
    static std::map<std::pair<Family, int>, long long> verified;
    static std::recursive_mutex mutex;
    std::lock_guard<std::recursive_mutex> lock(mutex);

    auto key = std::make_pair(fam, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        SolutionSet s;
        switch (fam) {
        case Family::Gauss: s = classify_gauss(fam, 0); break;
        case Family::FD:
            if (n == 1) s = classify_gauss(fam, 1);
            else if (n == 2) s = classify_f1();
            else s = classify_fd(n, classify_family(Family::FD, n - 1, opts));
            break;
        case Family::FA:
            if (n == 1) s = classify_gauss(fam, 1);
            else if (n == 2) s = classify_f2();
            else if (n == 3) s = classify_fa3(classify_family(Family::FA, 2, opts));
            else {
                classify_family(Family::FA, n - 1, opts);
                s = classify_empty(Family::FA, n);
            }
            break;
        case Family::FB:
            s = classify_transported(Family::FB, n, classify_family(Family::FA, n, opts));
            break;
        case Family::FC:
            if (n == 1) s = classify_gauss(fam, 1);
            else if (n == 2) s = classify_f4();
            else s = classify_fc(n, classify_family(Family::FC, n - 1, opts));
            break;
        case Family::G1: s = classify_g1(); break;
        case Family::G2:
            s = classify_transported(Family::G2, 0, classify_family(Family::FD, 2, opts));
            break;
        case Family::G3: s = classify_g3(); break;
        case Family::H1: s = classify_h1(); break;
        case Family::H2:
            s = classify_transported(Family::H2, 0, classify_family(Family::FA, 2, opts));
            break;
        case Family::H3:
            s = classify_transported(Family::H3, 0, classify_family(Family::G1, 0, opts));
            break;
        case Family::H4: s = classify_h4(); break;
        case Family::H5: s = classify_h5(); break;
        case Family::H6:
            s = classify_transported(Family::H6, 0, classify_family(Family::G1, 0, opts));
            break;
        case Family::H7:
            s = classify_transported(Family::H7, 0, classify_family(Family::H4, 0, opts));
            break;
        }
        it = cache.emplace(key, std::move(s)).first;
    }
    if (opts.verify_families && verified[key] < opts.max_family_denominator) {
        for (const auto& f : it->second.families) {
            std::vector<Rat> rs;
            for (const Rat& r : proper_fractions(opts.max_family_denominator))
                if (f.admissible(r)) rs.push_back(r);
            const GkzSystem& fsys = family_system(fam, n);
            std::vector<char> ok = parallel_map(rs, [&](const Rat& r) -> char {
                std::vector<Rat> alpha = frac_tuple(alpha_from_classical(fam, n, f.at(r)));
                return is_nonresonant(fsys, alpha) && is_algebraic(fsys, alpha);
            });
            for (size_t i = 0; i < rs.size(); ++i)
                if (!ok[i])
                    throw Error("parametric family " + f.label + " of " + family_name(fam) +
                                " fails at r = " + rat_to_string(rs[i]));
        }
        verified[key] = opts.max_family_denominator;
    }
    return it->second;
}

bool f4_characterization(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2) {
    auto is_triple = [](const Rat& x, const Rat& y, const Rat& z) {
        return gauss_triple_classify(x, y, z).kind != GaussClassification::NotAlgebraic;
    };
    if (!is_triple(a, b, c1) || !is_triple(a, b, c2)) return false;
    if (frac(a + b - c1 - c2) == 0) return true;
    int halves = 0;
    for (const Rat& x : {frac(c1), frac(c2), frac(b - a)})
        if (x == half) ++halves;
    return halves >= 2;
}

bool fc_signature_condition(const Rat& a, const Rat& b, const std::vector<Rat>& c) {
    if (!(a >= 0 && a <= b && b < 1))
        throw InputError("fc_signature_condition: need 0 <= a <= b < 1");
    for (const Rat& x : c)
        if (!(x >= 0 && x < 1))
            throw InputError("fc_signature_condition: c coordinates must lie in [0,1)");
    const int n = static_cast<int>(c.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        Rat sum = 0;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) { sum += c[i]; ++size; }
        if (size % 2 == 0) {
            Rat v = sum - Rat(size, 2);
            if (!(b - 1 <= v && v < a)) return false;
        } else {
            Rat v = sum - Rat(size - 1, 2);
            if (!(a <= v && v < b)) return false;
        }
    }
    return true;
}

CompareReport compare_with_reference(const SolutionSet& s, const std::string& table_id) {
    const ReferenceTable& tab = reference_table(table_id);
    CompareReport rep;
    if (tab.fam != s.fam || (family_is_lauricella(s.fam) && tab.n != s.n)) {
        rep.detail = "table " + table_id + " does not describe this family";
        return rep;
    }
    // Family patterns: structural equality.
    auto pattern_key = [](const ParametricFamily& f) {
        std::vector<Rat> key;
        for (long long sl : f.slope) key.push_back(Rat(sl));
        for (const Rat& off : f.offset) key.push_back(frac(off));
        std::vector<Rat> ex = f.excluded_r;
        std::sort(ex.begin(), ex.end());
        key.insert(key.end(), ex.begin(), ex.end());
        return key;
    };
    std::set<std::vector<Rat>> fa, fb;
    for (const auto& f : s.families) fa.insert(pattern_key(f));
    for (const auto& f : tab.families) fb.insert(pattern_key(f));
    rep.families_match = fa == fb;

    // Expected sporadic set: closure of the published representatives.
    std::set<Tuple> expected;
    for (const auto& r : tab.representatives) expected.insert(frac_tuple(r));
    expected = closure(std::move(expected), tab.symmetries);
    bool full_equal = expected == s.sporadic;

    // Representatives: published rows as given vs recomputed canonical rows.
    std::set<Tuple> published(tab.representatives.begin(), tab.representatives.end());
    std::vector<Tuple> computed = s.representatives();
    std::set<Tuple> computed_set(computed.begin(), computed.end());
    for (const auto& t : published)
        if (!computed_set.count(t)) rep.missing.push_back(t);
    for (const auto& t : computed_set)
        if (!published.count(t)) rep.extra.push_back(t);

    // Duplicate rows printed in the source table must still be solutions
    // equivalent to a listed representative.
    bool duplicates_ok = true;
    for (const auto& d : tab.duplicate_rows) {
        Tuple t = frac_tuple(d);
        duplicates_ok = duplicates_ok && s.sporadic.count(t) > 0 &&
                        expected.count(t) > 0;
    }

    rep.pass = rep.families_match && full_equal && duplicates_ok && rep.missing.empty() &&
               rep.extra.empty();
    rep.detail = "sporadic computed " + std::to_string(s.sporadic.size()) + ", expected " +
                 std::to_string(expected.size()) +
                 (full_equal ? "; full sets equal" : "; full sets differ") +
                 (rep.families_match ? "; families match" : "; families differ") +
                 (tab.duplicate_rows.empty()
                      ? ""
                      : (duplicates_ok ? "; published duplicate rows verified"
                                       : "; published duplicate rows failed"));
    return rep;
}

} // namespace hyperclass
