#pragma once

#include <vector>

#include "hyperclass/rational.hpp"

namespace hyperclass {

/// Dense integer vector. Lattice data in this project stays tiny (dimension
/// <= 9, entries of the input points in [-2, 2]); 64-bit entries with
/// arbitrary-precision internals in the elimination kernels are exact.
using IntVec = std::vector<long long>;
/// Dense integer matrix, row major.
using IntMat = std::vector<IntVec>;

long long dot(const IntVec& a, const IntVec& b);
Rat dot_rat(const IntVec& a, const std::vector<Rat>& x);

/// Exact determinant of a square matrix (fraction-free Gaussian elimination
/// over arbitrary-precision integers). Throws InputError on non-square input.
long long determinant(const IntMat& m);

/// True iff the integer span of the vectors is all of Z^r.
bool integer_span_is_full(const std::vector<IntVec>& vectors, int r);

/// Rank over Q of the given vectors.
int rank(const std::vector<IntVec>& vectors);

/// Canonical basis (row-style Hermite normal form, positive pivots, entries
/// above a pivot reduced into [0, pivot)) of {l in Z^N : sum l_i points_i = 0}.
std::vector<IntVec> integer_kernel_basis(const std::vector<IntVec>& points, int r);

/// Row HNF of the given lattice basis; canonical for the spanned lattice.
std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows);

/// Divides by the gcd of the entries (zero vector is returned unchanged).
IntVec content_normalize(IntVec v);

/// Adjugate matrix and determinant: adj(m) * m = det(m) * I.
struct Adjugate {
    IntMat adj;
    long long det = 0;
};
Adjugate adjugate(const IntMat& m);

/// Solves m * x = rhs exactly over Q for square invertible m.
std::vector<Rat> solve_square(const IntMat& m, const std::vector<Rat>& rhs);

} // namespace hyperclass
