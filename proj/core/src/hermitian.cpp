#include "sweil/hermitian.hpp"

#include <stdexcept>

namespace sweil::fieldops {

using fock::Family;
using fock::PackedKey;

std::pair<Scalar, GenKey> adjoint_generator(const GenKey& k) {
    const GenKey flipped{k.family, k.comp, -k.mode};
    return {k.family == Family::eps ? Scalar::i() : -Scalar::i(), flipped};
}

namespace {

void require_relative(const Monomial& m, int dim) {
    if (!fock::is_relative(m, dim)) throw std::domain_error("not a relative monomial: " + fock::to_text(m));
}

// applies keys right to left, so the product reads left to right
FockVector apply_product(const std::vector<GenKey>& keys, FockVector v) {
    for (auto it = keys.rbegin(); it != keys.rend(); ++it) v = fock::apply_generator(*it, v);
    return v;
}

}  // namespace

FockVector star(const Monomial& m, int dim) {
    require_relative(m, dim);
    std::vector<GenKey> eps, taus;
    Monomial base;
    for (int i = 0; i < m.nb(); ++i) base.add_boson(m.bosons()[i]);
    for (int i = 0; i < m.nf(); ++i) {
        const GenKey k = fock::unpack(m.fermions()[i]);
        if (k.mode == 0) base.insert_fermion(m.fermions()[i]);
        else if (k.family == Family::eps) eps.push_back(k);
        else taus.push_back(k);
    }
    // fermions are canonically ordered with the mode-0 tau last, so m reads
    // eps... tau... vac_rel with sign +1
    std::vector<GenKey> out;
    for (const GenKey& k : taus) out.push_back({Family::eps, k.comp, -k.mode});
    for (const GenKey& k : eps) out.push_back({Family::tau, k.comp, -k.mode});
    return apply_product(out, FockVector(base));
}

FockVector star(const FockVector& v, int dim) {
    FockVector out;
    for (const auto& [m, c] : v.terms()) out += c * star(m, dim);
    return out;
}

Scalar curly_form(const Monomial& x, const Monomial& y, int dim) {
    require_relative(x, dim);
    require_relative(y, dim);
    if (x.size() != y.size()) return Scalar(0);
    // x = g_1 ... g_k vac_rel; {x, y} = vac_rel-coefficient of g_k^+ ... g_1^+ y
    Monomial cur = y;
    Scalar coef(1);
    auto step = [&](PackedKey key) {
        const auto [c, adj] = adjoint_generator(fock::unpack(key));
        const std::int64_t f = fock::apply_generator(fock::pack(adj), cur);
        if (f == 0) return false;
        coef *= c * Scalar(static_cast<long long>(f));
        return true;
    };
    for (int i = 0; i < x.nf(); ++i)
        if (fock::mode_of(x.fermions()[i]) != 0 && !step(x.fermions()[i])) return Scalar(0);
    for (int i = 0; i < x.nb(); ++i)
        if (!step(x.bosons()[i])) return Scalar(0);
    return cur == fock::relative_vacuum(dim) ? coef : Scalar(0);
}

Scalar curly_form(const FockVector& v, const FockVector& w, int dim) {
    Scalar s(0);
    for (const auto& [x, cx] : v.terms())
        for (const auto& [y, cy] : w.terms()) {
            const Scalar f = curly_form(x, y, dim);
            if (!f.is_zero()) s += cx.conj() * cy * f;
        }
    return s;
}

Scalar paren_form(const Monomial& x, const Monomial& y, int dim) {
    const auto deg = fock::energy_and_degrees(x, true);
    return curly_form(algebra::ipow(deg.a + deg.b) * star(x, dim), FockVector(y), dim);
}

Scalar paren_form(const FockVector& v, const FockVector& w, int dim) {
    Scalar s(0);
    for (const auto& [x, cx] : v.terms())
        for (const auto& [y, cy] : w.terms()) {
            const Scalar f = paren_form(x, y, dim);
            if (!f.is_zero()) s += cx.conj() * cy * f;
        }
    return s;
}

}  // namespace sweil::fieldops
