#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperclass/gkz.hpp"
#include "hyperclass/schwarz.hpp"

namespace hyperclass {

/// The function families: the four Lauricella classes (parametrized by the
/// number of variables n; the Appell functions F1..F4 are their n = 2 cases),
/// the three Horn G functions and the seven Horn H functions, plus the Gauss
/// function itself (= FD at n = 1).
enum class Family { Gauss, FD, FA, FB, FC, G1, G2, G3, H1, H2, H3, H4, H5, H6, H7 };

bool family_is_lauricella(Family f);

/// Accepts "FD", "F_D", "fa", "F1".."F4" (resolved to the Lauricella family
/// at n = 2), "G1".."G3", "H1".."H7", "Gauss". Returns the family and, for
/// the Appell aliases, the forced n. Throws UnsupportedError.
std::pair<Family, std::optional<int>> parse_family(const std::string& name);

std::string family_name(Family f);

/// Number of classical parameters (a, b..., c...) of the family.
int param_arity(Family f, int n);

/// Names of the classical parameters, e.g. {"a", "b1", "b2", "c"}.
std::vector<std::string> param_names(Family f, int n);

/// The validated system of the family (cached; transported families are
/// verified against their source on first construction).
const GkzSystem& family_system(Family f, int n);

/// Classical parameters -> alpha (exact affine map, not reduced mod Z).
std::vector<Rat> alpha_from_classical(Family f, int n, const std::vector<Rat>& params);

/// Inverse of alpha_from_classical.
std::vector<Rat> classical_from_alpha(Family f, int n, const std::vector<Rat>& alpha);

/// Declared linear isomorphism onto this family, if it is defined by
/// transport: (source family, source n, matrix of f).
struct TransportSpec {
    Family src;
    int src_n;
    IntMat f;
};
std::optional<TransportSpec> transport_source(Family f, int n);

/// Variable-drop restriction: returns (family', n', params'). Throws
/// UnsupportedError when the family has no drop rule for variable i (1-based).
struct Restriction {
    Family fam;
    int n;
    std::vector<Rat> params;
};
Restriction restrict_params(Family f, int n, const std::vector<Rat>& params, int i);

/// Gauss triples whose algebraicity is necessary for the algebraicity of the
/// family at these parameters.
std::vector<GaussTriple> necessary_gauss_triples(Family f, int n,
                                                 const std::vector<Rat>& params);

/// The published unimodular triangulation of FA, FC (any n), H1 and H4;
/// empty for the other families.
Triangulation reference_triangulation(Family f, int n);

/// Volume of the family's polytope in closed form (n+1, 2^n, 3 or 4).
long long expected_volume(Family f, int n);

/// Non-resonance as linear forms in the classical parameters (mod Z): the
/// facet forms composed with the parameter map, constants dropped, signs
/// canonicalized, deduplicated, sorted.
std::vector<IntVec> nonresonance_forms_classical(Family f, int n);

} // namespace hyperclass
