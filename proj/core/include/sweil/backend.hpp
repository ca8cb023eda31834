#pragma once

#include "sweil/lie.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sweil::algebra {

enum class BackendKind { loop, loop_module, witt, fmu };

// Graded Lie algebra (loop, witt) or graded module over one (loop_module,
// fmu). Components are 0-based; the mode is the power of t.
struct GradedBackend {
    BackendKind kind = BackendKind::loop;
    LieAlgebraSpec lie;                 // loop, loop_module
    // loop_module: phi(v_i) w_a = sum_b action[(i*mod_dim + a)*mod_dim + b] w_b
    int mod_dim = 0;
    std::vector<Scalar> action;
    Scalar lambda, mu;                  // fmu
    std::string label;

    // number of components of each graded piece of the space the Fock module is built on
    int dim() const;
    bool is_lie() const { return kind == BackendKind::loop || kind == BackendKind::witt; }
    bool has_identity_form() const { return kind == BackendKind::loop && lie.has_identity_form(); }
};

GradedBackend loop_backend(LieAlgebraSpec spec, std::string label = "loop");
GradedBackend loop_module_backend(LieAlgebraSpec spec, int mod_dim, std::vector<Scalar> action);
GradedBackend witt_backend();
GradedBackend fmu_backend(Scalar lambda, Scalar mu);

// "loop:sl2", "loop:abelian:D", "witt", "fmu:LAMBDA:MU"
GradedBackend parse_backend(const std::string& descriptor);

using ComponentVector = std::vector<std::pair<int, Scalar>>;  // (component, coefficient), zeros dropped

// [x_(i,m), y_(j,n)] for Lie kinds; phi(x_(i,m)) y_(j,n) for module kinds
// (for fmu the first argument is the Witt generator L_m, i ignored).
// The result lives at mode m+n.
ComponentVector backend_bracket(const GradedBackend& b, int i, int m, int j, int n);

}  // namespace sweil::algebra
