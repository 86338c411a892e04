#pragma once

#include <vector>

#include "hyperclass/linalg.hpp"

namespace hyperclass {

/// Irredundant facet description of the cone spanned by the generators:
/// integer content-1 forms m with cone = {x : m(x) >= 0 for all m}, sorted
/// lexicographically by coefficients. Throws ConeError unless the generators
/// span a pointed full-dimensional cone.
std::vector<IntVec> cone_facets(const std::vector<IntVec>& generators);

/// Extreme rays of {x : f(x) >= 0 for all f in forms} (the reverse of
/// cone_facets); requires the result to be pointed and full-dimensional in
/// the same sense. Content-1, lex-sorted.
std::vector<IntVec> cone_rays(const std::vector<IntVec>& forms);

/// True iff x is a nonnegative rational combination of the generators
/// (decided by exact LP feasibility).
bool in_cone_hull(const std::vector<IntVec>& generators, const std::vector<Rat>& x);

/// True iff the cone spanned by the generators contains no line.
bool cone_is_pointed(const std::vector<IntVec>& generators);

} // namespace hyperclass
