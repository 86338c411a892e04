#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "hyperclass/rational.hpp"

namespace hyperclass {

using GaussTriple = std::array<Rat, 3>;

/// The 14 sporadic (lambda, mu, nu) tuples of the classical list for the
/// Gauss function (the dihedral one-parameter family (1/2, 1/2, s) is handled
/// separately as the three type-1 forms).
const std::vector<GaussTriple>& schwarz_lmn_tuples();

/// The three one-parameter type-1 forms: (r, -r, 1/2), (r, r+1/2, 1/2),
/// (r, r+1/2, 2r) with r in (0,1), r != 1/2.
enum class Type1Form { MinusR, RPlusHalfHalf, RPlusHalfTwoR };

struct GaussClassification {
    enum Kind { Type1, Type2, NotAlgebraic } kind = NotAlgebraic;
    Type1Form form = Type1Form::MinusR; // valid when kind == Type1
    Rat r = 0;                          // dito
};

/// The 408 sporadic triples (a, b, c) in [0,1)^3: every permutation/sign
/// variant of the 14 tuples pushed through (a,b,c) = ((1-l-m-n)/2, (1-l-m+n)/2,
/// 1-l) and reduced mod Z. Cached; closed under conjugation and a<->b swap.
const std::set<GaussTriple>& type2_triples();

/// Type-1 match (either (a,b,c) or (b,a,c), r != 0, 1/2), else 408-membership,
/// else NotAlgebraic. Inputs are reduced mod Z first.
GaussClassification gauss_triple_classify(const Rat& a, const Rat& b, const Rat& c);

/// True iff the triple matches a type-1 form after substituting the given r
/// (used to recognize instances of parametric families).
bool matches_type1_form(Type1Form form, const Rat& r, const GaussTriple& t);

/// Classical interlacing test: for every k coprime to the common denominator,
/// {ka} <= {kc} < {kb} or {kb} <= {kc} < {ka}. Pre: a, b, c-a, c-b all
/// non-integral (throws InputError otherwise).
bool gauss_is_algebraic(const Rat& a, const Rat& b, const Rat& c);

/// Smallest elements (fraction order: smaller denominator first, then smaller
/// numerator; tuples lexicographic) of each pair {orbit(t), orbit(swap t)} of
/// the 408 triples. Exactly the sporadic rows of the classical table.
std::vector<GaussTriple> type2_orbit_pair_representatives();

} // namespace hyperclass
