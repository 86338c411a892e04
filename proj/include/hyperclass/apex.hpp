#pragma once

#include <optional>
#include <vector>

#include "hyperclass/gkz.hpp"

namespace hyperclass {

/// A point p = x + {alpha} of K = (alpha + Z^r) n C(A) with p - a_i outside
/// the cone for every generator a_i.
struct Apexpoint {
    IntVec offset;                 // x, relative to the reduced alpha
    std::vector<Rat> point;        // x + {alpha}
    std::vector<Rat> facet_values; // m_j(p), all >= 0
};

/// Complete list of apexpoints, sorted lexicographically by offset.
/// Only the fractional part of alpha matters; alpha is reduced first.
std::vector<Apexpoint> apexpoints(const GkzSystem& sys, const std::vector<Rat>& alpha);

/// Number of apexpoints.
long long signature(const GkzSystem& sys, const std::vector<Rat>& alpha);

/// Thm-1.7 style decision: non-resonant alpha is algebraic iff the signature
/// at {k alpha} is the volume for every k in (Z/DZ)^*. Throws ResonanceError
/// on resonant input.
bool is_algebraic(const GkzSystem& sys, const std::vector<Rat>& alpha);

struct KReport {
    long long denominator = 1;
    std::vector<std::pair<long long, long long>> signature_per_k; // (k, signature)
    bool algebraic = false;
};

/// Per-conjugate signatures; stops at the first non-maximal k unless `full`.
KReport algebraicity_report(const GkzSystem& sys, const std::vector<Rat>& alpha, bool full);

/// Floor vectors of the facet forms achieving maximal signature, with one
/// rational witness each.
struct InterlacingTable {
    std::vector<IntVec> forms; // = sys.facets, canonical order
    long long volume = 0;
    long long max_signature = 0;
    struct Row {
        std::vector<long long> floors;
        std::vector<Rat> witness;
        long long sig = 0;
    };
    std::vector<Row> maximal;     // rows achieving max_signature, sorted by floors
    long long feasible_count = 0; // floor vectors admitting a non-resonant witness

    const Row* find(const std::vector<long long>& floors) const;
    /// Floor vector of a concrete alpha, in the table's form order.
    std::vector<long long> floors_of(const std::vector<Rat>& alpha) const;
};

/// Enumerates every candidate floor vector, searches a non-resonant witness
/// by exact LP, computes its signature, and keeps the maximal set.
InterlacingTable derive_interlacing(const GkzSystem& sys);

/// Coordinatewise fractional part of k * t; k must be coprime to the common
/// denominator of t.
std::vector<Rat> conjugate_tuple(const std::vector<Rat>& t, long long k);

/// All conjugates {frac(k t) : gcd(k, D) = 1}, sorted.
std::vector<std::vector<Rat>> conjugation_orbit(const std::vector<Rat>& t);

/// Smallest l with l = k (mod D) and gcd(l, D_big) = 1; requires D | D_big
/// and gcd(k, D) = 1.
long long lift_coprime(long long k, long long D, long long D_big);

/// Smallest k in [1, q), gcd(k, q) = 1, with frac(k r) in [t, 1/2); r = p/q
/// reduced with q >= 3, t in (0, 1/2).
std::optional<long long> half_window_witness(const Rat& r, const Rat& t);

} // namespace hyperclass
