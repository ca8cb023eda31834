#include "sweil/lie.hpp"

namespace sweil::algebra {

namespace {

void validate(const LieAlgebraSpec& s) {
    if (s.dim <= 0) throw std::invalid_argument("Lie algebra dimension must be positive");
    if (s.constants.size() != static_cast<std::size_t>(s.dim) * s.dim * s.dim)
        throw std::invalid_argument("structure constant array has wrong size");
    if (s.form && s.form->size() != static_cast<std::size_t>(s.dim) * s.dim)
        throw std::invalid_argument("form matrix has wrong size");
}

int small_rank(std::vector<Scalar> m, int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!m[r * n + col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[rank * n + k]);
        for (int r = rank + 1; r < n; ++r) {
            if (m[r * n + col].is_zero()) continue;
            Scalar f = m[r * n + col] / m[rank * n + col];
            for (int k = col; k < n; ++k) m[r * n + k] -= f * m[rank * n + k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool LieAlgebraSpec::has_identity_form() const {
    if (!form) return false;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (B(i, j) != Scalar(i == j ? 1 : 0)) return false;
    return true;
}

LieAlgebraSpec abelian_algebra(int dim) {
    LieAlgebraSpec s;
    s.dim = dim;
    s.constants.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar(0));
    std::vector<Scalar> id(static_cast<std::size_t>(dim) * dim, Scalar(0));
    for (int i = 0; i < dim; ++i) id[i * dim + i] = 1;
    s.form = std::move(id);
    return s;
}

LieAlgebraSpec builtin_sl2_orthonormal() {
    LieAlgebraSpec s = abelian_algebra(3);
    const Scalar two_i = Scalar(2) * Scalar::i();
    auto put = [&](int a, int b, int k, const Scalar& v) {
        s.c(a, b, k) = v;
        s.c(b, a, k) = -v;
    };
    put(0, 1, 2, -two_i);
    put(0, 2, 1, two_i);
    put(1, 2, 0, -two_i);
    return s;
}

LieCheck check_jacobi(const LieAlgebraSpec& s) {
    validate(s);
    const int n = s.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (s.c(i, j, k) != -s.c(j, i, k))
                    return {false, "structure constants are not antisymmetric", std::array<int, 3>{i, j, k}};
    // [v_i,[v_j,v_k]] + [v_j,[v_k,v_i]] + [v_k,[v_i,v_j]]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int out = 0; out < n; ++out) {
                    Scalar acc;
                    for (int l = 0; l < n; ++l) {
                        acc += s.c(j, k, l) * s.c(i, l, out);
                        acc += s.c(k, i, l) * s.c(j, l, out);
                        acc += s.c(i, j, l) * s.c(k, l, out);
                    }
                    if (!acc.is_zero()) return {false, "Jacobi identity fails", std::array<int, 3>{i, j, k}};
                }
    return {};
}

LieCheck check_invariant_form(const LieAlgebraSpec& s) {
    validate(s);
    if (!s.form) throw unsupported_operation("no invariant form present");
    const int n = s.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.B(i, j) != s.B(j, i)) return {false, "form is not symmetric", std::array<int, 3>{i, j, -1}};
    if (small_rank(*s.form, n) != n) return {false, "form is degenerate", std::nullopt};
    // B([x,y],z) + B(y,[x,z]) = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar acc;
                for (int l = 0; l < n; ++l) {
                    acc += s.c(i, j, l) * s.B(l, k);
                    acc += s.c(i, k, l) * s.B(j, l);
                }
                if (!acc.is_zero()) return {false, "form is not invariant", std::array<int, 3>{i, j, k}};
            }
    return {};
}

}  // namespace sweil::algebra
