#pragma once

#include "sweil/backend.hpp"
#include "sweil/fieldops.hpp"
#include "sweil/symbols.hpp"

namespace sweil::fieldops {

using algebra::GradedBackend;

// theta(x) = rho(x) + pi(x) for x the j-th generator at mode n, acting
// through the backend bracket (loop, witt) or module action (loop_module, fmu).
FieldOperator build_theta(const GradedBackend& b, int j, int n);
// same, restricted to Lie backends
FieldOperator build_theta_adjoint(const GradedBackend& b, int j, int n);
// theta(L_n) on the fmu module
FieldOperator build_witt_rep(const GradedBackend& b, int n);
// tau(x) for x the j-th generator at mode n
FieldOperator build_tau(const GradedBackend& b, int j, int n);

// N=2 generators L_n, H_n, h_n, p_n. fmu uses its (lambda, mu); loop and
// loop_module use lambda = mu = 0 on every component.
FieldOperator build_n2_family(const GradedBackend& b, Sym s, int n);

// S'(2,alpha) representation on a loop backend
FieldOperator build_s2alpha_family(const GradedBackend& b, const Scalar& alpha, Sym s, int n);
// -sum over all m of :tau_m eps_m:
FieldOperator build_s2alpha_HH(const GradedBackend& b);

struct Differential {
    FieldOperator d;
    FieldOperator cubic;  // fermionic part d^(1)
    FieldOperator mixed;  // d^(2)
};
Differential build_differential_d(const GradedBackend& b);

FieldOperator build_koszul_h(const GradedBackend& b);

// sl(2) of exterior derivations on the relative model
FieldOperator build_sl2_EHF(const GradedBackend& b, Der s);

// Bidegree change (delta a, delta b) of a summand in the relative model, where
// mode-0 tau does not count.
std::pair<int, int> relative_bidegree_shift(const PackedKey* keys, int n, int ncreators);
// d1 raises a, d2 lowers b
std::pair<FieldOperator, FieldOperator> split_d1_d2(const FieldOperator& d);
// i (d1 - d2)
FieldOperator build_dc(const FieldOperator& d);

}  // namespace sweil::fieldops
