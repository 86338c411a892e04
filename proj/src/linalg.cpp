#include "hyperclass/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hyperclass {

namespace {

using BigVec = std::vector<Big>;
using BigMat = std::vector<BigVec>;

BigMat to_big(const std::vector<IntVec>& m) {
    BigMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
    return out;
}

long long big_to_ll_checked(const Big& b) {
    if (b > Big(std::numeric_limits<long long>::max()) ||
        b < Big(std::numeric_limits<long long>::min()))
        throw InputError("matrix entry out of 64-bit range: " + b.str());
    return static_cast<long long>(b);
}

Big det_big(BigMat a) {
    const size_t n = a.size();
    Big sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? Big(1) : sign * a[n - 1][n - 1];
}

// Row HNF with optional tracking of the unimodular row transform.
// Returns the number of nonzero (pivot) rows; h is reduced in place.
size_t row_hnf(BigMat& h, BigMat* transform) {
    const size_t rows = h.size();
    const size_t cols = rows == 0 ? 0 : h[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Clear the column below pivot_row with gcd steps.
        while (true) {
            size_t best = rows;
            for (size_t i = pivot_row; i < rows; ++i) {
                if (h[i][col] == 0) continue;
                if (best == rows || abs(h[i][col]) < abs(h[best][col])) best = i;
            }
            if (best == rows) break;
            std::swap(h[pivot_row], h[best]);
            if (transform) std::swap((*transform)[pivot_row], (*transform)[best]);
            bool done = true;
            for (size_t i = pivot_row + 1; i < rows; ++i) {
                if (h[i][col] == 0) continue;
                Big q = h[i][col] / h[pivot_row][col]; // truncated; remainder shrinks
                for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[pivot_row][j];
                if (transform)
                    for (size_t j = 0; j < (*transform)[i].size(); ++j)
                        (*transform)[i][j] -= q * (*transform)[pivot_row][j];
                if (h[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (pivot_row < rows && h[pivot_row][col] != 0) {
            if (h[pivot_row][col] < 0) {
                for (auto& x : h[pivot_row]) x = -x;
                if (transform)
                    for (auto& x : (*transform)[pivot_row]) x = -x;
            }
            // Reduce the entries above the pivot into [0, pivot).
            for (size_t i = 0; i < pivot_row; ++i) {
                Big q = h[i][col] / h[pivot_row][col];
                if (h[i][col] - q * h[pivot_row][col] < 0) q -= 1;
                if (q == 0) continue;
                for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[pivot_row][j];
                if (transform)
                    for (size_t j = 0; j < (*transform)[i].size(); ++j)
                        (*transform)[i][j] -= q * (*transform)[pivot_row][j];
            }
            ++pivot_row;
        }
    }
    return pivot_row;
}

std::vector<IntVec> from_big(const BigMat& m) {
    std::vector<IntVec> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const Big& x : m[i]) out[i].push_back(big_to_ll_checked(x));
    }
    return out;
}

} // namespace

long long dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot_rat(const IntVec& a, const std::vector<Rat>& x) {
    if (a.size() != x.size()) throw InputError("dot_rat: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * x[i];
    return s;
}

long long determinant(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw InputError("determinant: matrix not square");
    return big_to_ll_checked(det_big(to_big(m)));
}

bool integer_span_is_full(const std::vector<IntVec>& vectors, int r) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != r)
            throw InputError("integer_span_is_full: dimension mismatch");
    BigMat h = to_big(vectors);
    size_t nrank = row_hnf(h, nullptr);
    if (nrank != static_cast<size_t>(r)) return false;
    for (int i = 0; i < r; ++i)
        if (h[i][i] != 1) return false;
    return true;
}

int rank(const std::vector<IntVec>& vectors) {
    if (vectors.empty()) return 0;
    BigMat h = to_big(vectors);
    return static_cast<int>(row_hnf(h, nullptr));
}

std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows) {
    BigMat h = to_big(rows);
    size_t nrank = row_hnf(h, nullptr);
    h.resize(nrank);
    return from_big(h);
}

std::vector<IntVec> integer_kernel_basis(const std::vector<IntVec>& points, int r) {
    const size_t n = points.size();
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != r)
            throw InputError("integer_kernel_basis: dimension mismatch");
    BigMat h = to_big(points);
    BigMat u(n, BigVec(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    size_t nrank = row_hnf(h, &u);
    // Rows of u past the rank are a basis of the left kernel of the point matrix,
    // i.e. of {l : sum l_i a_i = 0}.
    BigMat kernel(u.begin() + nrank, u.end());
    std::vector<IntVec> basis = from_big(kernel);
    return hermite_normal_form(basis);
}

IntVec content_normalize(IntVec v) {
    long long g = 0;
    for (long long x : v) g = gcd_ll(g, x);
    if (g > 1)
        for (long long& x : v) x /= g;
    return v;
}

Adjugate adjugate(const IntMat& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("adjugate: matrix not square");
    Adjugate out;
    out.det = determinant(m);
    out.adj.assign(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            IntMat minor;
            minor.reserve(n - 1);
            for (size_t a = 0; a < n; ++a) {
                if (a == j) continue;
                IntVec row;
                row.reserve(n - 1);
                for (size_t b = 0; b < n; ++b)
                    if (b != i) row.push_back(m[a][b]);
                minor.push_back(std::move(row));
            }
            long long c = n == 1 ? 1 : determinant(minor);
            out.adj[i][j] = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return out;
}

std::vector<Rat> solve_square(const IntMat& m, const std::vector<Rat>& rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw InputError("solve_square: dimension mismatch");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InputError("solve_square: matrix not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n] = rhs[i];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InputError("solve_square: singular matrix");
        std::swap(a[col], a[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace hyperclass
