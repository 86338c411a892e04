#include <doctest.h>

#include <random>

#include "hyperclass/linalg.hpp"

using namespace hyperclass;

namespace {

// Cofactor expansion, independent of the elimination-based determinant.
long long det_cofactor(const IntMat& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    long long sum = 0, sign = 1;
    for (size_t j = 0; j < n; ++j) {
        IntMat minor;
        for (size_t i = 1; i < n; ++i) {
            IntVec row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        sum += sign * m[0][j] * det_cofactor(minor);
        sign = -sign;
    }
    return sum;
}

} // namespace

TEST_CASE("determinant identities") {
    IntMat id4 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(determinant(id4) == 1);

    // columns e1, e2, e3, e1+e2-e4
    IntMat m = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    CHECK(determinant(m) == -1);

    IntMat singular = {{1, 2, 1}, {0, 1, 0}, {1, 2, 1}};
    CHECK(determinant(singular) == 0);

    CHECK_THROWS_AS(determinant(IntMat{{1, 2}}), InputError);
}

TEST_CASE("determinant agrees with cofactor expansion on random 4x4") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        IntMat m(4, IntVec(4));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng() % 7) - 3;
        CHECK(determinant(m) == det_cofactor(m));
    }
}

TEST_CASE("integer span") {
    CHECK(integer_span_is_full({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
    CHECK_FALSE(integer_span_is_full({{2, 0}, {0, 1}}, 2));
    CHECK(integer_span_is_full({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, 3));
    CHECK_THROWS_AS(integer_span_is_full({{1, 0}}, 3), InputError);
}

TEST_CASE("kernel basis is canonical for the lattice") {
    // Gauss configuration: kernel spanned by (1, 1, -1, -1).
    std::vector<IntVec> gauss = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
    auto basis = integer_kernel_basis(gauss, 3);
    REQUIRE(basis.size() == 1);
    CHECK(hermite_normal_form(basis) == hermite_normal_form({{-1, -1, 1, 1}}));

    for (const auto& l : basis) {
        IntVec sum(3, 0);
        for (size_t i = 0; i < gauss.size(); ++i)
            for (int j = 0; j < 3; ++j) sum[j] += l[i] * gauss[i][j];
        CHECK(sum == IntVec{0, 0, 0});
    }
}

TEST_CASE("hermite form is invariant under unimodular row operations") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IntVec> rows(2, IntVec(5));
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<long long>(rng() % 9) - 4;
        if (rank(rows) < 2) continue;
        std::vector<IntVec> mixed = rows;
        long long c = static_cast<long long>(rng() % 5) - 2;
        for (int j = 0; j < 5; ++j) mixed[0][j] += c * mixed[1][j];
        std::swap(mixed[0], mixed[1]);
        CHECK(hermite_normal_form(rows) == hermite_normal_form(mixed));
    }
}

TEST_CASE("adjugate identity") {
    IntMat m = {{2, 1, 0}, {1, -1, 3}, {0, 2, 1}};
    Adjugate a = adjugate(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long sum = 0;
            for (int k = 0; k < 3; ++k) sum += a.adj[i][k] * m[k][j];
            CHECK(sum == (i == j ? a.det : 0));
        }
}
