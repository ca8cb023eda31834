#pragma once

#include "sweil/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sweil::cohomology {

using algebra::Scalar;

// sorted by index, no stored zeros
using SparseVec = std::vector<std::pair<int, Scalar>>;

// y += c x
void axpy(SparseVec& y, const Scalar& c, const SparseVec& x);
Scalar entry(const SparseVec& v, int i);

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}
    bool is_zero() const;
    std::size_t nonzeros() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseVec multiply(const SparseMatrix& a, const SparseVec& x);

struct RankKernel {
    int rank = 0;
    std::vector<SparseVec> kernel;
};
// Column-by-column reduction against normalized pivot vectors; the pivot of a
// vector is its smallest row index. Exact over Q(i), deterministic.
RankKernel exact_rank_kernel(const SparseMatrix& m, bool want_kernel = true);
inline int exact_rank(const SparseMatrix& m) { return exact_rank_kernel(m, false).rank; }

// Coordinates with respect to a fixed independent family of vectors.
class SubspaceSolver {
public:
    explicit SubspaceSolver(const std::vector<SparseVec>& basis);
    // nullopt if w is not in the span
    std::optional<SparseVec> coordinates(SparseVec w) const;
    int dim() const { return dim_; }

private:
    struct Pivot {
        SparseVec v;     // leading entry 1 at its first index
        SparseVec comb;  // v as a combination of the basis
    };
    std::vector<Pivot> pivots_;
    std::vector<std::pair<int, int>> by_row_;  // (row, pivot index), sorted
    int dim_ = 0;
    const Pivot* find(int row) const;
};

// Dense row-major matrix, used for Gram matrices and the rank oracle.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    static Matrix identity(int n);
    Scalar& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool is_zero() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix to_dense(const SparseMatrix& m);
SparseMatrix to_sparse(const Matrix& m);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix conj_transpose(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Independent oracle: dense fraction-free (Bareiss) elimination after clearing
// denominators row by row.
int dense_rank(const Matrix& m);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    bool definite() const { return neg == 0 && zero == 0; }
    bool degenerate() const { return zero > 0; }
    std::string str() const;  // "p3n1z0"
    friend bool operator==(const Inertia&, const Inertia&) = default;
};
// Signature of a Hermitian matrix by congruence; throws if m is not Hermitian.
Inertia hermitian_inertia(const Matrix& m);

}  // namespace sweil::cohomology
