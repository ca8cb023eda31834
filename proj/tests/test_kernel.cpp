#include "sweil/builders.hpp"
#include "sweil/kernel.hpp"

#include <doctest.h>

using namespace sweil;
using namespace sweil::verify;
using algebra::parse_backend;
using fock::Box;

namespace {

std::size_t first_nonzero(const std::vector<FieldOperator>& ops, const Identity& id,
                          const std::vector<Monomial>& states) {
    for (std::size_t s = 0; s < states.size(); ++s) {
        auto e = evaluate_identity(ops, id, states[s]);
        if (!(e.lhs == e.rhs)) return s;
    }
    return kNoFailure;
}

}  // namespace

TEST_CASE("kernel commutators agree with the plain path") {
    const auto b = parse_backend("loop:sl2");
    const Scalar a = Scalar::frac(1, 2);
    std::vector<FieldOperator> ops;
    for (Sym s : {Sym::L, Sym::E, Sym::F, Sym::h, Sym::p, Sym::x, Sym::y})
        for (int n : {-1, 0, 1}) ops.push_back(fieldops::build_s2alpha_family(b, a, s, n));
    ops.push_back(fieldops::build_differential_d(b).d);
    const auto states = fock::enumerate_box(3, Box{1, 1});
    std::vector<Identity> ids;
    for (std::size_t i = 0; i < ops.size(); i += 2)
        for (std::size_t j = 1; j < ops.size(); j += 3) ids.push_back({"c", {comm(int(i), int(j))}});
    // products mixing all word kinds
    ids.push_back({"mix", {comm(0, 3), op(4, Scalar::frac(2, 3), true), unit(Scalar::i())}});
    const auto k1 = check_identities(ops, ids, states, 1);
    const auto k3 = check_identities(ops, ids, states, 3);
    CHECK(k1 == k3);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        INFO(i);
        CHECK(k1[i] == first_nonzero(ops, ids[i], states));
    }
}

TEST_CASE("kernel passes a true relation and catches a mutation") {
    const auto b = parse_backend("loop:sl2");
    const Scalar a = Scalar::frac(1, 2);
    std::vector<FieldOperator> ops{
        fieldops::build_s2alpha_family(b, a, Sym::h, 1), fieldops::build_s2alpha_family(b, a, Sym::p, -1),
        fieldops::build_s2alpha_family(b, a, Sym::L, 0), fieldops::build_s2alpha_family(b, a, Sym::H, 0)};
    // [h_1, p_-1] = L_0 - (1/2)(-1 - 1 + 1 - a) H_0 + 9 c(h_1, p_-1)
    const Scalar q = Scalar(0) + (a + Scalar(1)) / Scalar(2);
    const Scalar cc = Scalar(9) / Scalar(6) * (q * q - Scalar::frac(1, 4));
    const Scalar hc = -(Scalar(-1) - a) / Scalar(2);
    Identity good{"ok", {comm(0, 1), op(2, Scalar(1), true), op(3, hc, true), unit(cc, true)}};
    Identity bad = good;
    bad.words[2].coef += Scalar(1);
    const auto states = fock::enumerate_box(3, Box{2, 1});
    const auto r = check_identities(ops, {good, bad}, states, 2);
    CHECK(r[0] == kNoFailure);
    CHECK(r[1] == first_nonzero(ops, bad, states));
    CHECK(r[1] != kNoFailure);
}
