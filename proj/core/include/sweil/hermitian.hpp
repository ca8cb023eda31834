#pragma once

#include "sweil/fock.hpp"

#include <utility>

namespace sweil::fieldops {

using algebra::Scalar;
using fock::FockVector;
using fock::GenKey;
using fock::Monomial;

// Adjoint of a generator with respect to {.,.}: a multiple of the generator of
// the same family at the opposite mode,
//   eps_n -> i eps_-n,  tau_n -> -i tau_-n,  gamma_n -> -i gamma_-n,  beta_n -> -i beta_-n.
// These are the signs compatible with the canonical (anti)commutators.
std::pair<Scalar, GenKey> adjoint_generator(const GenKey& k);

// Swaps eps(n) <-> tau(-n) for the nonzero-mode fermions of a relative monomial:
// eps_n1..eps_na tau_m1..tau_mb vac_rel -> eps_-m1..eps_-mb tau_-n1..tau_-na vac_rel.
// Throws std::domain_error outside the relative model.
FockVector star(const Monomial& m, int dim);
FockVector star(const FockVector& v, int dim);

// {v, w}: antilinear in v, {vac_rel, vac_rel} = 1
Scalar curly_form(const Monomial& x, const Monomial& y, int dim);
Scalar curly_form(const FockVector& v, const FockVector& w, int dim);
// (v, w) = {i^(a+b) star(v), w}
Scalar paren_form(const Monomial& x, const Monomial& y, int dim);
Scalar paren_form(const FockVector& v, const FockVector& w, int dim);

}  // namespace sweil::fieldops
