#include "sweil/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace sweil::cohomology;
using sweil::algebra::Scalar;

namespace {

Scalar gauss(int re, int im) { return Scalar(sweil::algebra::Rational(re), sweil::algebra::Rational(im)); }

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

// product of random Gaussian-integer factors, rank <= inner
Matrix low_rank(std::mt19937& rng, int rows, int cols, int inner) {
    std::uniform_int_distribution<int> u(-3, 3);
    Matrix a(rows, inner), b(inner, cols);
    for (auto& x : a.a) x = gauss(u(rng), u(rng));
    for (auto& x : b.a) x = Scalar::frac(u(rng), 1 + (u(rng) + 3) % 3) + gauss(0, u(rng));
    return a * b;
}

}  // namespace

TEST_CASE("identity and the rank-one Hermitian example") {
    const Matrix id = Matrix::identity(5);
    const auto rk = exact_rank_kernel(to_sparse(id));
    CHECK(rk.rank == 5);
    CHECK(rk.kernel.empty());
    CHECK(dense_rank(id) == 5);

    const Matrix m = from_rows({{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(1)}});
    const auto r = exact_rank_kernel(to_sparse(m));
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    CHECK(multiply(to_sparse(m), r.kernel[0]).empty());
    CHECK(dense_rank(m) == 1);
}

TEST_CASE("sparse elimination against the dense oracle") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 2 + trial % 7, cols = 1 + (trial * 5) % 9, inner = 1 + trial % 4;
        const Matrix m = low_rank(rng, rows, cols, inner);
        const auto rk = exact_rank_kernel(to_sparse(m));
        INFO("trial " << trial);
        CHECK(rk.rank == dense_rank(m));
        CHECK(rk.rank <= inner);
        CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == cols);
        for (const auto& v : rk.kernel) CHECK(multiply(to_sparse(m), v).empty());
    }
}

TEST_CASE("subspace coordinates, inverse and products") {
    const std::vector<SparseVec> basis{{{0, Scalar(1)}, {2, Scalar(2)}}, {{1, Scalar::i()}, {2, Scalar(1)}}};
    const SubspaceSolver s(basis);
    SparseVec w;
    axpy(w, Scalar(3), basis[0]);
    axpy(w, Scalar::frac(-1, 2), basis[1]);
    const auto x = s.coordinates(w);
    REQUIRE(x);
    CHECK(entry(*x, 0) == Scalar(3));
    CHECK(entry(*x, 1) == Scalar::frac(-1, 2));
    CHECK_FALSE(s.coordinates({{2, Scalar(1)}}));
    CHECK_THROWS(SubspaceSolver({{{0, Scalar(1)}}, {{0, Scalar(2)}}}));

    const Matrix m = from_rows({{Scalar(2), Scalar::i()}, {Scalar(1), Scalar(0)}});
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})));
}

TEST_CASE("Hermitian inertia") {
    CHECK(hermitian_inertia(from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-3)}})) == Inertia{1, 1, 0});
    // zero diagonal needs the off-diagonal pivot
    CHECK(hermitian_inertia(from_rows({{Scalar(0), Scalar::i()}, {-Scalar::i(), Scalar(0)}})) == Inertia{1, 1, 0});
    CHECK(hermitian_inertia(from_rows({{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(1)}})) == Inertia{1, 0, 1});
    CHECK(hermitian_inertia(Matrix(3, 3)) == Inertia{0, 0, 3});
    CHECK(Inertia{2, 1, 0}.str() == "p2n1z0");
    CHECK_THROWS(hermitian_inertia(from_rows({{Scalar(0), Scalar(1)}, {Scalar(2), Scalar(0)}})));

    // congruence invariance against random invertible changes of basis
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> u(-2, 2);
    Matrix d(4, 4);
    d(0, 0) = Scalar(2);
    d(1, 1) = Scalar(-1);
    d(2, 2) = Scalar::frac(1, 3);
    for (int t = 0; t < 10; ++t) {
        Matrix p(4, 4);
        for (auto& x : p.a) x = gauss(u(rng), u(rng));
        if (!inverse(p)) continue;
        CHECK(hermitian_inertia(conj_transpose(p) * d * p) == Inertia{2, 1, 1});
    }
}
