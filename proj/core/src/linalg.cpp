#include "sweil/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sweil::cohomology {

using algebra::BigInt;

void axpy(SparseVec& y, const Scalar& c, const SparseVec& x) {
    if (c.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, c * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + c * x[j].second;
            if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

Scalar entry(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& p, int k) { return p.first < k; });
    return (it != v.end() && it->first == i) ? it->second : Scalar(0);
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

SparseVec multiply(const SparseMatrix& a, const SparseVec& x) {
    SparseVec y;
    for (const auto& [j, c] : x) axpy(y, c, a.columns.at(j));
    return y;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not compose");
    SparseMatrix out(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) out.columns[j] = multiply(a, b.columns[j]);
    return out;
}

namespace {

void scale(SparseVec& v, const Scalar& c) {
    for (auto& e : v) e.second *= c;
}

// pivots indexed by leading row
struct Echelon {
    struct Pivot {
        SparseVec v;
        SparseVec comb;
    };
    std::vector<int> at_row;
    std::vector<Pivot> pivots;

    explicit Echelon(int rows) : at_row(static_cast<std::size_t>(rows), -1) {}

    // reduces v (and its combination); returns true if v became a new pivot
    bool insert(SparseVec v, SparseVec comb, bool track) {
        while (!v.empty()) {
            const int r = v.front().first;
            const int p = at_row[r];
            if (p < 0) {
                const Scalar inv = Scalar(1) / v.front().second;
                scale(v, inv);
                if (track) scale(comb, inv);
                at_row[r] = static_cast<int>(pivots.size());
                pivots.push_back({std::move(v), std::move(comb)});
                return true;
            }
            const Scalar c = -v.front().second;
            axpy(v, c, pivots[p].v);
            if (track) axpy(comb, c, pivots[p].comb);
        }
        last_comb = std::move(comb);
        return false;
    }
    SparseVec last_comb;
};

}  // namespace

RankKernel exact_rank_kernel(const SparseMatrix& m, bool want_kernel) {
    RankKernel out;
    Echelon e(m.rows);
    for (int j = 0; j < m.cols; ++j) {
        SparseVec comb;
        if (want_kernel) comb.emplace_back(j, Scalar(1));
        if (e.insert(m.columns[j], std::move(comb), want_kernel)) {
            ++out.rank;
        } else if (want_kernel) {
            out.kernel.push_back(std::move(e.last_comb));
        }
    }
    return out;
}

SubspaceSolver::SubspaceSolver(const std::vector<SparseVec>& basis) : dim_(static_cast<int>(basis.size())) {
    for (int j = 0; j < dim_; ++j) {
        SparseVec v = basis[j];
        SparseVec comb{{j, Scalar(1)}};
        while (!v.empty()) {
            const Pivot* p = find(v.front().first);
            if (!p) break;
            const Scalar c = -v.front().second;
            axpy(v, c, p->v);
            axpy(comb, c, p->comb);
        }
        if (v.empty()) throw std::invalid_argument("subspace basis is linearly dependent");
        const Scalar inv = Scalar(1) / v.front().second;
        scale(v, inv);
        scale(comb, inv);
        const int row = v.front().first;
        by_row_.insert(std::lower_bound(by_row_.begin(), by_row_.end(), std::make_pair(row, 0)),
                       {row, static_cast<int>(pivots_.size())});
        pivots_.push_back({std::move(v), std::move(comb)});
    }
}

const SubspaceSolver::Pivot* SubspaceSolver::find(int row) const {
    auto it = std::lower_bound(by_row_.begin(), by_row_.end(), std::make_pair(row, 0));
    if (it == by_row_.end() || it->first != row) return nullptr;
    return &pivots_[it->second];
}

std::optional<SparseVec> SubspaceSolver::coordinates(SparseVec w) const {
    SparseVec x;
    while (!w.empty()) {
        const Pivot* p = find(w.front().first);
        if (!p) return std::nullopt;
        const Scalar c = w.front().second;
        axpy(w, -c, p->v);
        axpy(x, c, p->comb);
    }
    return x;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix to_dense(const SparseMatrix& m) {
    Matrix d(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, c] : m.columns[j]) d(i, j) = c;
    return d;
}

SparseMatrix to_sparse(const Matrix& m) {
    SparseMatrix s(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (!m(i, j).is_zero()) s.columns[j].emplace_back(i, m(i, j));
    return s;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not compose");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& c = x(i, k);
            if (c.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j)
                if (!y(k, j).is_zero()) z(i, j) += c * y(k, j);
        }
    return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes differ");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes differ");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Matrix conj_transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j).conj();
    return t;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows;
    Matrix a = m, inv = Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Scalar s = Scalar(1) / a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (int j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

int dense_rank(const Matrix& m) {
    Matrix a = m;
    for (int i = 0; i < a.rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < a.cols; ++j) l = algebra::lcm(l, a(i, j).denominator());
        if (l != 1)
            for (int j = 0; j < a.cols; ++j) a(i, j) *= Scalar(algebra::Rational(l));
    }
    int rank = 0;
    Scalar prev(1);
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int p = rank;
        while (p < a.rows && a(p, c).is_zero()) ++p;
        if (p == a.rows) continue;
        if (p != rank)
            for (int j = 0; j < a.cols; ++j) std::swap(a(p, j), a(rank, j));
        const Scalar piv = a(rank, c);
        for (int i = rank + 1; i < a.rows; ++i) {
            const Scalar f = a(i, c);
            for (int j = c + 1; j < a.cols; ++j) a(i, j) = (piv * a(i, j) - f * a(rank, j)) / prev;
            a(i, c) = Scalar(0);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::string Inertia::str() const {
    return "p" + std::to_string(pos) + "n" + std::to_string(neg) + "z" + std::to_string(zero);
}

Inertia hermitian_inertia(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("Gram matrix is not square");
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != m(j, i).conj()) throw std::invalid_argument("Gram matrix is not Hermitian");
    Matrix a = m;
    Inertia out;
    int n = a.rows;
    std::vector<int> live(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live[i] = i;
    // congruence: pick a nonzero diagonal pivot, or make one from an off-diagonal entry
    while (!live.empty()) {
        int piv = -1;
        for (int i : live)
            if (!a(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            int pi = -1, pj = -1;
            for (int i : live) {
                for (int j : live)
                    if (j != i && !a(i, j).is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
                if (pi >= 0) break;
            }
            if (pi < 0) {
                out.zero += static_cast<int>(live.size());
                break;
            }
            // v_i <- v_i + t v_j with t = conj(a_ij) gives diagonal 2|a_ij|^2
            const Scalar t = a(pi, pj).conj();
            for (int k = 0; k < n; ++k) a(pi, k) += t.conj() * a(pj, k);
            for (int k = 0; k < n; ++k) a(k, pi) += t * a(k, pj);
            piv = pi;
        }
        const Scalar d = a(piv, piv);
        if (!d.is_real()) throw std::logic_error("non-real diagonal in a Hermitian reduction");
        (d.re() > 0 ? out.pos : out.neg)++;
        live.erase(std::find(live.begin(), live.end(), piv));
        for (int i : live) {
            if (a(i, piv).is_zero()) continue;
            const Scalar f = a(i, piv) / d;
            for (int k : live) a(i, k) -= f * a(piv, k);
            a(i, piv) = Scalar(0);
        }
        for (int k : live) a(piv, k) = Scalar(0);
    }
    return out;
}

}  // namespace sweil::cohomology
