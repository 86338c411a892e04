#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperclass/cone.hpp"
#include "hyperclass/linalg.hpp"

namespace hyperclass {

/// Combinatorial data of a GKZ system: ordered point configuration A in Z^r,
/// grading form h with h(a_i) = 1, irredundant facet forms of the cone
/// spanned by A, canonical basis of the relation lattice, and the normalized
/// volume of the convex hull. Immutable after construction.
struct GkzSystem {
    int r = 0;
    int num_points = 0;
    std::vector<IntVec> points;
    IntVec h;
    std::vector<IntVec> facets;
    std::vector<IntVec> lattice_basis;
    long long volume = 0;
    /// Every coordinate of Z^N is hit by some relation with nonzero entry
    /// (holds for every family in this project; informational otherwise).
    bool lattice_touches_all = false;

    // Precomputed helpers for apexpoint enumeration.
    std::vector<IntVec> facet_on_points;   // [facet][point]
    IntVec facet_max_on_points;            // max over points, per facet
    std::vector<int> box_rows;             // r facet indices with invertible matrix
    IntMat box_adj;                        // adjugate of that submatrix
    long long box_det = 0;                 // its determinant (> 0)

    int facet_count() const { return static_cast<int>(facets.size()); }
};

/// Builds and validates a system from its point list. Throws SpanError,
/// GradingFormError or ConeError naming the Def-1.1 condition that failed.
GkzSystem build_system(std::vector<IntVec> points);

/// Hermite-canonical basis of {l in Z^N : sum l_i a_i = 0}.
std::vector<IntVec> lattice_of_relations(const std::vector<IntVec>& points);

/// Normalized volume of the convex hull of points lying on {h = 1}, by a
/// placing triangulation seeded from the first generators (sum of |det|).
long long normalized_volume(const std::vector<IntVec>& points, const IntVec& h);

/// Triangulation given as r-subsets of point indices (0-based).
using Triangulation = std::vector<std::vector<int>>;

struct TriangulationReport {
    bool ok = false;
    bool unimodular = false;
    long long volume = 0;
    bool saturated = false;
    std::string detail; // names the failed condition and offending simplices
};

/// Certifies a claimed unimodular triangulation: simplex determinants +-1,
/// vertex cover of A, pairwise cone intersections inside the shared face
/// (via extreme rays and exact membership), and convexity of the union
/// (every simplex wall is a global facet or shared with a neighbor).
TriangulationReport verify_triangulation(const GkzSystem& sys, const Triangulation& t);

/// True iff no facet form takes an integer value at alpha.
bool is_nonresonant(const GkzSystem& sys, const std::vector<Rat>& alpha);

/// Names the facets with integral value at alpha (empty iff non-resonant).
std::vector<int> resonant_facets(const GkzSystem& sys, const std::vector<Rat>& alpha);

/// Transports a system along a unimodular map f with f(A_src) = A_dst as
/// sets; returns the destination system and beta = f(alpha). The map is given
/// by its matrix (row i = coefficients of the i-th output coordinate).
std::pair<GkzSystem, std::vector<Rat>> transport(const IntMat& f, const GkzSystem& src,
                                                 const std::vector<Rat>& alpha);

/// Apply the matrix to an integer / rational vector.
IntVec apply_map(const IntMat& f, const IntVec& x);
std::vector<Rat> apply_map(const IntMat& f, const std::vector<Rat>& x);

/// Bounded saturation probe: every lattice point of the cone with h-level at
/// most hmax is a nonnegative integer combination of A.
bool bounded_saturation_check(const GkzSystem& sys, long long hmax);

/// All integer x with facet_lb[j] <= m_j(x) <= facet_ub[j] for every facet
/// and h_lb <= h(x) <= h_ub, sorted lexicographically. The region is a
/// polytope (the recession cone is C(A) with h <= 0, i.e. {0}), enumerated by
/// exact integer interval pruning.
std::vector<IntVec> lattice_points(const GkzSystem& sys, const std::vector<long long>& facet_lb,
                                   const std::vector<long long>& facet_ub, long long h_lb,
                                   long long h_ub);

} // namespace hyperclass
