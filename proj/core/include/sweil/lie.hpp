#pragma once

#include "sweil/scalar.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sweil::algebra {

struct unsupported_operation : std::logic_error {
    using std::logic_error::logic_error;
};

// Finite-dimensional Lie algebra with basis v_1..v_D (stored 0-based).
// [v_i, v_j] = sum_k c(i,j,k) v_k.
struct LieAlgebraSpec {
    int dim = 0;
    std::vector<Scalar> constants;                   // dim^3, row-major (i,j,k)
    std::optional<std::vector<Scalar>> form;         // dim^2

    const Scalar& c(int i, int j, int k) const { return constants[(i * dim + j) * dim + k]; }
    Scalar& c(int i, int j, int k) { return constants[(i * dim + j) * dim + k]; }
    const Scalar& B(int i, int j) const { return (*form)[i * dim + j]; }
    bool has_identity_form() const;
};

struct LieCheck {
    bool pass = true;
    std::string message;
    std::optional<std::array<int, 3>> witness;  // 0-based basis indices
};

LieAlgebraSpec abelian_algebra(int dim);
// {e+f, i(e-f), h} under one half of the trace form of the defining representation
LieAlgebraSpec builtin_sl2_orthonormal();

LieCheck check_jacobi(const LieAlgebraSpec& spec);
LieCheck check_invariant_form(const LieAlgebraSpec& spec);

}  // namespace sweil::algebra
