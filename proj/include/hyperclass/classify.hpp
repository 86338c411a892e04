#pragma once

#include <set>
#include <string>
#include <vector>

#include "hyperclass/families.hpp"

namespace hyperclass {

/// One-parameter family of solutions in a free rational r: coordinate i is
/// slope[i] * r + offset[i] (mod Z), with r in (0,1) minus the excluded
/// values. Example: slopes (1,-1,0,0), offsets (0,0,1/2,1/2) is (r,-r,1/2,1/2).
struct ParametricFamily {
    std::string label;
    std::vector<long long> slope;
    std::vector<Rat> offset;
    std::vector<Rat> excluded_r;

    std::vector<Rat> at(const Rat& r) const;       // reduced to [0,1)
    bool admissible(const Rat& r) const;           // r in (0,1), not excluded
    bool matches(const std::vector<Rat>& t) const; // t is an instance (exact mod Z)
};

/// Classification result: the proved parametric families plus the sporadic
/// solutions as the full set of ordered parameter tuples in [0,1)^k (closed
/// under conjugation, and under the family's parameter symmetries whenever
/// the generation is symmetric, which it is for every driver here).
struct SolutionSet {
    Family fam = Family::Gauss;
    int n = 0;
    std::vector<ParametricFamily> families;
    std::set<std::vector<Rat>> sporadic;
    /// Non-identity parameter permutations leaving the solution set invariant.
    std::vector<std::vector<int>> symmetries;
    /// Subgroup used to reduce to table rows (the published tables do not
    /// always reduce by the full symmetry group).
    std::vector<std::vector<int>> display_symmetries;

    /// Conjugation orbits of the sporadic set, each sorted, ordered by their
    /// smallest element (fraction order).
    std::vector<std::vector<std::vector<Rat>>> orbits() const;
    /// Smallest tuple of each closure class under conjugation + symmetries.
    std::vector<std::vector<Rat>> representatives() const;
    /// Size of the closure class of a representative.
    long long class_size(const std::vector<Rat>& rep) const;
};

struct ClassifyOptions {
    long long max_family_denominator = 24; // sampling bound for parametric families
    bool verify_families = true;
};

/// Regenerates the solution set of the family by the two-stage scheme:
/// candidate generation following the classification case analyses (type-1
/// scans with the proved denominator bounds, 408-set lookups, transports,
/// restriction intersections), then an exact filter by non-resonance and the
/// maximal-signature criterion at every conjugate.
SolutionSet classify_family(Family fam, int n, const ClassifyOptions& opts = {});

/// F4 characterization: (a,b,c1) and (a,b,c2) are Gauss triples, and either
/// a+b = c1+c2 (mod Z) or at least two of {c1, c2, b-a} are 1/2 (mod Z).
bool f4_characterization(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2);

/// Sufficient signature-2^n condition for FC: for all I (|I| even), J (|J|
/// odd): b-1 <= sum_I c_i - |I|/2 < a <= sum_J c_j - (|J|-1)/2 < b.
/// Pre: 0 <= a <= b < 1 and c_i in [0,1).
bool fc_signature_condition(const Rat& a, const Rat& b, const std::vector<Rat>& c);

struct CompareReport {
    bool pass = false;
    std::vector<std::vector<Rat>> missing; // expected but not computed
    std::vector<std::vector<Rat>> extra;   // computed but not expected
    bool families_match = false;
    std::string detail;
};

/// Set-difference report of a computed solution set against the embedded
/// reference table (full sporadic closure and family patterns).
CompareReport compare_with_reference(const SolutionSet& s, const std::string& table_id);

} // namespace hyperclass
