#include "hyperclass/apex.hpp"

#include <algorithm>

#include "hyperclass/lp.hpp"

namespace hyperclass {

namespace {

struct EnumerationBounds {
    std::vector<long long> facet_lb, facet_ub;
    long long h_lb = 0, h_ub = 0;
    std::vector<long long> floors; // floor(m_j(alpha))
};

// Integer bounds for the offset x of candidate points p = x + alpha with
// p in C(A) and h(p) < min(r, |A|). Completeness: writing p as a nonnegative
// combination of at most r generators (conic Caratheodory), h(p) >= r forces
// some coefficient >= 1, so p - a_i stays in the cone and p is no apexpoint;
// the same argument with all |A| generators gives the |A| bound.
EnumerationBounds offset_bounds(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    EnumerationBounds b;
    const int d = sys.facet_count();
    const long long level = std::min<long long>(sys.r, sys.num_points);
    b.facet_lb.resize(d);
    b.facet_ub.resize(d);
    b.floors.resize(d);
    for (int j = 0; j < d; ++j) {
        Rat v = dot_rat(sys.facets[j], alpha);
        b.floors[j] = rat_floor_ll(v);
        b.facet_lb[j] = -b.floors[j];
        b.facet_ub[j] = rat_floor_ll(Rat(sys.facet_max_on_points[j]) * level - v);
    }
    Rat halpha = dot_rat(sys.h, alpha);
    b.h_lb = -rat_floor_ll(halpha);
    b.h_ub = level - 1 - rat_floor_ll(halpha);
    return b;
}

std::vector<IntVec> apex_offsets(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    EnumerationBounds b = offset_bounds(sys, alpha);
    std::vector<IntVec> candidates =
        lattice_points(sys, b.facet_lb, b.facet_ub, b.h_lb, b.h_ub);
    const int d = sys.facet_count();
    std::vector<IntVec> out;
    for (const auto& x : candidates) {
        std::vector<long long> val(d);
        for (int j = 0; j < d; ++j) val[j] = dot(sys.facets[j], x);
        bool apex = true;
        for (int i = 0; i < sys.num_points && apex; ++i) {
            bool leaves_cone = false;
            for (int j = 0; j < d && !leaves_cone; ++j)
                if (val[j] <= sys.facet_on_points[j][i] - b.floors[j] - 1) leaves_cone = true;
            apex = leaves_cone;
        }
        if (apex) out.push_back(x);
    }
    return out; // already sorted by lattice_points
}

} // namespace

std::vector<Apexpoint> apexpoints(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    if (static_cast<int>(alpha.size()) != sys.r)
        throw InputError("apexpoints: alpha dimension mismatch");
    std::vector<Rat> a = frac_tuple(alpha);
    std::vector<Apexpoint> out;
    for (auto& x : apex_offsets(sys, a)) {
        Apexpoint ap;
        ap.point.resize(sys.r);
        for (int i = 0; i < sys.r; ++i) ap.point[i] = Rat(x[i]) + a[i];
        ap.facet_values.reserve(sys.facet_count());
        for (int j = 0; j < sys.facet_count(); ++j)
            ap.facet_values.push_back(dot_rat(sys.facets[j], ap.point));
        ap.offset = std::move(x);
        out.push_back(std::move(ap));
    }
    return out;
}

long long signature(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    if (static_cast<int>(alpha.size()) != sys.r)
        throw InputError("signature: alpha dimension mismatch");
    return static_cast<long long>(apex_offsets(sys, frac_tuple(alpha)).size());
}

bool is_algebraic(const GkzSystem& sys, const std::vector<Rat>& alpha) {
    return algebraicity_report(sys, alpha, false).algebraic;
}

KReport algebraicity_report(const GkzSystem& sys, const std::vector<Rat>& alpha, bool full) {
    std::vector<Rat> a = frac_tuple(alpha);
    if (!is_nonresonant(sys, a))
        throw ResonanceError("non-resonance required for the algebraicity criterion");
    KReport rep;
    rep.denominator = common_denominator(a);
    rep.algebraic = true;
    for (long long k = 1; k < std::max(rep.denominator, 2LL); ++k) {
        if (gcd_ll(k, rep.denominator) != 1) continue;
        long long sig = signature(sys, conjugate_tuple(a, k));
        rep.signature_per_k.push_back({k, sig});
        if (sig != sys.volume) {
            rep.algebraic = false;
            if (!full) break;
        }
    }
    return rep;
}

const InterlacingTable::Row* InterlacingTable::find(const std::vector<long long>& fl) const {
    for (const auto& row : maximal)
        if (row.floors == fl) return &row;
    return nullptr;
}

std::vector<long long> InterlacingTable::floors_of(const std::vector<Rat>& alpha) const {
    std::vector<Rat> a = frac_tuple(alpha);
    std::vector<long long> fl(forms.size());
    for (size_t j = 0; j < forms.size(); ++j) fl[j] = rat_floor_ll(dot_rat(forms[j], a));
    return fl;
}

InterlacingTable derive_interlacing(const GkzSystem& sys) {
    InterlacingTable table;
    table.forms = sys.facets;
    table.volume = sys.volume;
    const int d = sys.facet_count();
    const int r = sys.r;

    // Candidate floor ranges: with every alpha_i in [0, 1), the value of a
    // facet form lies strictly between the sums of its negative and positive
    // coefficients (each bound attained only with integral value), so for a
    // non-resonant witness the floor ranges over [neg_sum, pos_sum - 1].
    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        long long neg = 0, pos = 0;
        for (long long c : sys.facets[j]) (c < 0 ? neg : pos) += c;
        lo[j] = neg;
        hi[j] = pos - 1;
        if (hi[j] < lo[j]) hi[j] = lo[j]; // all-negative form: floor stuck at neg sum
    }

    std::vector<long long> floors(d, 0);
    std::vector<InterlacingTable::Row> rows;
    auto search_witness = [&]() -> std::optional<std::vector<Rat>> {
        InequalitySystem lp;
        lp.num_vars = r;
        for (int i = 0; i < r; ++i) {
            std::vector<Rat> unit(r, Rat(0));
            unit[i] = 1;
            lp.add(unit, Rel::Ge, 0);
            lp.add(std::move(unit), Rel::Lt, 1);
        }
        for (int j = 0; j < d; ++j) {
            std::vector<Rat> coef(r);
            for (int i = 0; i < r; ++i) coef[i] = Rat(sys.facets[j][i]);
            lp.add(coef, Rel::Gt, Rat(floors[j]));
            lp.add(std::move(coef), Rel::Lt, Rat(floors[j] + 1));
        }
        return solve_mixed_inequalities(lp);
    };
    auto rec = [&](auto&& self, int j) -> void {
        if (j == d) {
            auto witness = search_witness();
            if (!witness) return;
            ++table.feasible_count;
            InterlacingTable::Row row;
            row.floors = floors;
            row.witness = *witness;
            row.sig = signature(sys, row.witness);
            rows.push_back(std::move(row));
            return;
        }
        for (long long v = lo[j]; v <= hi[j]; ++v) {
            floors[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);

    for (const auto& row : rows) table.max_signature = std::max(table.max_signature, row.sig);
    for (auto& row : rows)
        if (row.sig == table.max_signature) table.maximal.push_back(std::move(row));
    std::sort(table.maximal.begin(), table.maximal.end(),
              [](const auto& a, const auto& b) { return a.floors < b.floors; });
    return table;
}

std::vector<Rat> conjugate_tuple(const std::vector<Rat>& t, long long k) {
    long long D = common_denominator(t);
    if (gcd_ll(k, D) != 1)
        throw InputError("conjugate: k is not coprime to the denominator");
    std::vector<Rat> out;
    out.reserve(t.size());
    for (const Rat& q : t) out.push_back(frac(Rat(k) * q));
    return out;
}

std::vector<std::vector<Rat>> conjugation_orbit(const std::vector<Rat>& t) {
    std::vector<Rat> base = frac_tuple(t);
    long long D = common_denominator(base);
    std::vector<std::vector<Rat>> orbit;
    for (long long k = 1; k < std::max(D, 2LL); ++k) {
        if (gcd_ll(k, D) != 1) continue;
        orbit.push_back(conjugate_tuple(base, k));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

long long lift_coprime(long long k, long long D, long long D_big) {
    if (D <= 0 || D_big <= 0 || D_big % D != 0)
        throw InputError("lift_coprime: D must divide the larger denominator");
    if (gcd_ll(k, D) != 1) throw InputError("lift_coprime: gcd(k, D) != 1");
    long long l = ((k % D) + D) % D;
    if (l == 0) l = D; // k = 0 mod D only when D = 1
    for (; l <= D * D_big + D; l += D)
        if (gcd_ll(l, D_big) == 1) return l;
    throw Error("lift_coprime: no lift found"); // unreachable by the CRT argument
}

std::optional<long long> half_window_witness(const Rat& r, const Rat& t) {
    long long q = rat_floor_ll(Rat(denominator(r)));
    if (q < 3) throw InputError("half_window_witness: denominator must be >= 3");
    if (!(t > 0 && t < Rat(1, 2)))
        throw InputError("half_window_witness: t must lie in (0, 1/2)");
    for (long long k = 1; k < q; ++k) {
        if (gcd_ll(k, q) != 1) continue;
        Rat v = frac(Rat(k) * r);
        if (v >= t && v < Rat(1, 2)) return k;
    }
    return std::nullopt;
}

} // namespace hyperclass
