#include "sweil/sca.hpp"

#include "sweil/lie.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sweil::sca {

using algebra::unsupported_operation;

SCAElement SCAElement::gen(Sym s, int n, Scalar c) {
    SCAElement e;
    e.add({s, n}, c);
    return e;
}

SCAElement SCAElement::central(Scalar c) {
    SCAElement e;
    e.central_ = std::move(c);
    return e;
}

void SCAElement::add(const Gen& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> SCAElement::parity() const {
    std::optional<int> p;
    for (const auto& [g, c] : terms_) {
        const int q = sweil::parity(g.sym);
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    if (!central_.is_zero() && p && *p != 0) return std::nullopt;
    return p.value_or(0);
}

SCAElement SCAElement::centerless() const {
    SCAElement e = *this;
    e.central_ = Scalar(0);
    return e;
}

SCAElement& SCAElement::operator+=(const SCAElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    central_ += o.central_;
    return *this;
}

SCAElement& SCAElement::operator-=(const SCAElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    central_ -= o.central_;
    return *this;
}

SCAElement& SCAElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        central_ = Scalar(0);
        return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    central_ *= s;
    return *this;
}

std::string SCAElement::str(bool n2) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + std::string(sym_name(g.sym, n2)) + "_" + std::to_string(g.n);
    }
    if (!central_.is_zero()) {
        if (!out.empty()) out += " + ";
        out += central_.str() + "*C";
    }
    return out;
}

namespace {

Scalar half(const Scalar& x) { return x * Scalar::frac(1, 2); }

// ordered pairs present in the table; false if (s, t) must be looked up reversed
bool table(const Scalar& a, Sym s, int n, Sym t, int k, SCAElement& out) {
    const bool dlt = n == -k;
    auto put = [&](Sym r, const Scalar& c) { out.add({r, n + k}, c); };
    switch (s) {
    case Sym::L:
        switch (t) {
        case Sym::L:
            put(Sym::L, Scalar(n - k));
            if (dlt) out += SCAElement::central(Scalar::frac(static_cast<long long>(n) * (n * n - 1), 12));
            return true;
        case Sym::E:
        case Sym::H:
        case Sym::F: put(t, Scalar(-k)); return true;
        case Sym::h:
        case Sym::y: put(t, half(Scalar(n - 2 * k + 1) - a)); return true;
        case Sym::p:
        case Sym::x: put(t, half(Scalar(n - 2 * k - 1) + a)); return true;
        }
        return false;
    case Sym::E:
        if (t == Sym::F) {
            put(Sym::H, Scalar(1));
            if (dlt) out += SCAElement::central(Scalar::frac(n, 6));
            return true;
        }
        if (t == Sym::y) return put(Sym::h, Scalar(1)), true;
        if (t == Sym::p) return put(Sym::x, Scalar(1)), true;
        return false;
    case Sym::F:
        if (t == Sym::h) return put(Sym::y, Scalar(1)), true;
        if (t == Sym::x) return put(Sym::p, Scalar(1)), true;
        return false;
    case Sym::H:
        switch (t) {
        case Sym::E: put(Sym::E, Scalar(2)); return true;
        case Sym::F: put(Sym::F, Scalar(-2)); return true;
        case Sym::H:
            if (dlt) out += SCAElement::central(Scalar::frac(n, 3));
            return true;
        case Sym::h:
        case Sym::x: put(t, Scalar(1)); return true;
        case Sym::y:
        case Sym::p: put(t, Scalar(-1)); return true;
        default: return false;
        }
    case Sym::h:
        if (t == Sym::x) return put(Sym::E, Scalar(k + 1 - n) - a), true;
        if (t == Sym::p) {
            put(Sym::L, Scalar(1));
            put(Sym::H, -half(Scalar(k - n + 1) - a));
            if (dlt) {
                Scalar q = Scalar(n - 1) + half(a + Scalar(1));
                out += SCAElement::central(Scalar::frac(1, 6) * (q * q - Scalar::frac(1, 4)));
            }
            return true;
        }
        return false;
    case Sym::p:
        if (t == Sym::y) return put(Sym::F, Scalar(k - n - 1) + a), true;
        return false;
    case Sym::x:
        if (t == Sym::y) {
            put(Sym::L, Scalar(-1));
            put(Sym::H, half(Scalar(k - n - 1) + a));
            if (dlt) {
                Scalar q = Scalar(-n - 1) + half(a + Scalar(1));
                out += SCAElement::central(Scalar::frac(-1, 6) * (q * q - Scalar::frac(1, 4)));
            }
            return true;
        }
        return false;
    case Sym::y: return false;
    }
    return false;
}

}  // namespace

SCAElement bracket(const Scalar& alpha, Sym a, int n, Sym b, int k) {
    SCAElement out;
    if (table(alpha, a, n, b, k, out)) return out;
    if (table(alpha, b, k, a, n, out)) {
        // [a, b] = -(-1)^{p(a)p(b)} [b, a]
        if (!(parity(a) && parity(b))) out *= Scalar(-1);
    }
    return out;
}

SCAElement bracket(const Scalar& alpha, const SCAElement& a, const SCAElement& b) {
    SCAElement out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) out += (ca * cb) * bracket(alpha, ga.sym, ga.n, gb.sym, gb.n);
    return out;
}

GBracket n2_g_bracket(const GTerm& a, const GTerm& b) {
    GBracket out;
    const Scalar c = a.coef * b.coef;
    auto add = [&](GTerm::Kind kind, int sign, int idx2, const Scalar& v) {
        if (!v.is_zero()) out.terms.push_back({kind, sign, idx2, c * v});
    };
    // modes as doubled integers; n for L, H is index2 / 2
    auto forward = [&](const GTerm& x, const GTerm& y) -> bool {
        const int n2 = x.index2, m2 = y.index2;
        const bool dlt = n2 == -m2;
        if (x.kind == GTerm::L) {
            const int n = n2 / 2;
            if (y.kind == GTerm::L) {
                const int m = m2 / 2;
                add(GTerm::L, 0, n2 + m2, Scalar(n - m));
                if (dlt) out.central += c * Scalar::frac(static_cast<long long>(n) * n * n - n, 12);
            } else if (y.kind == GTerm::H) {
                add(GTerm::H, 0, n2 + m2, Scalar(-m2 / 2));
            } else {
                // (n/2 - r)
                add(GTerm::G, y.sign, n2 + m2, Scalar::frac(n2 - 2 * m2, 4));
            }
            return true;
        }
        if (x.kind == GTerm::H) {
            if (y.kind == GTerm::H) {
                if (dlt) out.central += c * Scalar::frac(n2 / 2, 3);
                return true;
            }
            if (y.kind == GTerm::G) {
                add(GTerm::G, y.sign, n2 + m2, Scalar(y.sign));
                return true;
            }
            return false;
        }
        if (x.kind == GTerm::G && x.sign > 0 && y.kind == GTerm::G && y.sign < 0) {
            // 2 L_{r+s} + (r - s) H_{r+s} + C/3 (r^2 - 1/4) delta
            add(GTerm::L, 0, n2 + m2, Scalar(2));
            add(GTerm::H, 0, n2 + m2, Scalar::frac(n2 - m2, 2));
            if (dlt) out.central += c * Scalar::frac(1, 3) * (Scalar::frac(static_cast<long long>(n2) * n2, 4) - Scalar::frac(1, 4));
            return true;
        }
        return x.kind == GTerm::G && y.kind == GTerm::G && x.sign == y.sign;
    };
    if (forward(a, b)) return out;
    if (forward(b, a)) {
        const bool both_odd = a.kind == GTerm::G && b.kind == GTerm::G;
        if (!both_odd) {
            for (auto& t : out.terms) t.coef = -t.coef;
            out.central = -out.central;
        }
    }
    return out;
}

namespace {

GTerm to_g(Sym s, int n) {
    switch (s) {
    case Sym::L: return {GTerm::L, 0, 2 * n, Scalar(1)};
    case Sym::H: return {GTerm::H, 0, 2 * n, Scalar(1)};
    case Sym::h: return {GTerm::G, 1, 2 * n - 1, Scalar(1)};
    case Sym::p: return {GTerm::G, -1, 2 * n + 1, Scalar(1)};
    default: throw std::invalid_argument("not an N=2 symbol: " + std::string(sym_name(s)));
    }
}

}  // namespace

SCAElement n2_bracket(Sym a, int n, Sym b, int k) {
    GBracket g = n2_g_bracket(to_g(a, n), to_g(b, k));
    // h = G+/sqrt2, p = G-/sqrt2: odd-odd brackets pick up 1/2, mixed ones none
    const Scalar scale = (parity(a) && parity(b)) ? Scalar::frac(1, 2) : Scalar(1);
    SCAElement out = SCAElement::central(g.central * scale);
    for (const GTerm& t : g.terms) {
        switch (t.kind) {
        case GTerm::L: out.add({Sym::L, t.index2 / 2}, t.coef * scale); break;
        case GTerm::H: out.add({Sym::H, t.index2 / 2}, t.coef * scale); break;
        case GTerm::G:
            if (t.sign > 0) out.add({Sym::h, (t.index2 + 1) / 2}, t.coef * scale);
            else out.add({Sym::p, (t.index2 - 1) / 2}, t.coef * scale);
            break;
        }
    }
    return out;
}

SCAElement n2_bracket(const SCAElement& a, const SCAElement& b) {
    SCAElement out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) out += (ca * cb) * n2_bracket(ga.sym, ga.n, gb.sym, gb.n);
    return out;
}

SCAElement spectral_flow(const Scalar& alpha, const SCAElement& a) {
    SCAElement out = SCAElement::central(a.central_part());
    for (const auto& [g, c] : a.terms()) {
        switch (g.sym) {
        case Sym::L:
            out.add(g, c);
            out.add({Sym::H, g.n}, -c * half(alpha));
            if (g.n == 0) out += SCAElement::central(c * alpha * alpha * Scalar::frac(1, 24));
            break;
        case Sym::H:
            out.add(g, c);
            if (g.n == 0) out += SCAElement::central(-c * alpha * Scalar::frac(1, 6));
            break;
        case Sym::h:
        case Sym::p: out.add(g, c); break;
        default:
            throw std::invalid_argument("spectral flow is defined on the N=2 subalgebra only, got " +
                                        std::string(sym_name(g.sym)));
        }
    }
    return out;
}

Scalar deg(const Scalar& alpha, Sym s, int n) {
    switch (s) {
    case Sym::E:
    case Sym::x: return Scalar(n + 1) - alpha;
    case Sym::F:
    case Sym::y: return Scalar(n - 1) + alpha;
    default: return Scalar(n);
    }
}

SCAElement L0_element(const Scalar& alpha) {
    SCAElement e = SCAElement::gen(Sym::L, 0, Scalar(-1));
    e.add({Sym::H, 0}, half(Scalar(1) - alpha));
    return e;
}

bool is_integer(const Scalar& alpha) { return alpha.is_real() && alpha.is_integer(); }

SCAElement derext_action(const Scalar& alpha, Der d, Sym s, int n) {
    if (d != Der::H && !is_integer(alpha))
        throw unsupported_operation("E and F are exterior derivations only for integer alpha");
    const int a = d == Der::H ? 0 : static_cast<int>(alpha.re().convert_to<long>());
    switch (d) {
    case Der::E:
        if (s == Sym::h) return SCAElement::gen(Sym::x, n - 1 + a);
        if (s == Sym::y) return SCAElement::gen(Sym::p, n - 1 + a);
        return {};
    case Der::F:
        if (s == Sym::x) return SCAElement::gen(Sym::h, n + 1 - a);
        if (s == Sym::p) return SCAElement::gen(Sym::y, n + 1 - a);
        return {};
    case Der::H:
        if (s == Sym::x || s == Sym::p) return SCAElement::gen(s, n);
        if (s == Sym::h || s == Sym::y) return SCAElement::gen(s, n, Scalar(-1));
        return {};
    }
    return {};
}

SCAElement derext_action(const Scalar& alpha, Der d, const SCAElement& a) {
    SCAElement out;
    for (const auto& [g, c] : a.terms()) out += c * derext_action(alpha, d, g.sym, g.n);
    return out;
}

std::array<Scalar, 3> derext_bracket(Der a, Der b) {
    auto idx = [](Der d) { return static_cast<int>(d); };
    std::array<Scalar, 3> out{};
    auto fwd = [&](Der x, Der y, std::array<Scalar, 3>& r) {
        if (x == Der::E && y == Der::F) return r[idx(Der::H)] = Scalar(1), true;
        if (x == Der::H && y == Der::E) return r[idx(Der::E)] = Scalar(2), true;
        if (x == Der::H && y == Der::F) return r[idx(Der::F)] = Scalar(-2), true;
        return false;
    };
    if (fwd(a, b, out)) return out;
    if (fwd(b, a, out))
        for (auto& v : out) v = -v;
    return out;
}

namespace {

std::vector<Gen> basis(int window) {
    std::vector<Gen> out;
    for (Sym s : kAllSyms)
        for (int n = -window; n <= window; ++n) out.push_back({s, n});
    return out;
}

std::string gen_str(const Gen& g) { return std::string(sym_name(g.sym)) + "_" + std::to_string(g.n); }

}  // namespace

JacobiReport check_super_jacobi(const Scalar& alpha, int window) {
    const auto gens = basis(window);
    for (const Gen& a : gens)
        for (const Gen& b : gens) {
            SCAElement ab = bracket(alpha, a.sym, a.n, b.sym, b.n);
            SCAElement ba = bracket(alpha, b.sym, b.n, a.sym, a.n);
            const int pab = parity(a.sym) * parity(b.sym);
            if (!(ab + Scalar(pab ? -1 : 1) * ba).is_zero())
                return {false, "antisymmetry fails for (" + gen_str(a) + ", " + gen_str(b) + ")"};
        }
    for (const Gen& a : gens) {
        const SCAElement ea = SCAElement::gen(a.sym, a.n);
        for (const Gen& b : gens) {
            const SCAElement eb = SCAElement::gen(b.sym, b.n);
            const SCAElement ab = bracket(alpha, a.sym, a.n, b.sym, b.n);
            const int pab = parity(a.sym) * parity(b.sym);
            for (const Gen& c : gens) {
                const SCAElement ec = SCAElement::gen(c.sym, c.n);
                // [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]], central parts included
                SCAElement j = bracket(alpha, ea, bracket(alpha, b.sym, b.n, c.sym, c.n)) - bracket(alpha, ab, ec) -
                               Scalar(pab ? -1 : 1) * bracket(alpha, eb, bracket(alpha, a.sym, a.n, c.sym, c.n));
                if (!j.is_zero())
                    return {false, "super-Jacobi fails for (" + gen_str(a) + ", " + gen_str(b) + ", " + gen_str(c) +
                                       "): " + j.str()};
            }
        }
    }
    return {};
}

JacobiReport check_derext_derivations(const Scalar& alpha, int window) {
    const auto gens = basis(window);
    std::vector<Der> ders{Der::H};
    if (is_integer(alpha)) ders = {Der::E, Der::H, Der::F};
    for (Der d : ders)
        for (const Gen& a : gens)
            for (const Gen& b : gens) {
                const SCAElement ea = SCAElement::gen(a.sym, a.n), eb = SCAElement::gen(b.sym, b.n);
                SCAElement lhs = derext_action(alpha, d, bracket(alpha, a.sym, a.n, b.sym, b.n));
                SCAElement rhs = bracket(alpha, derext_action(alpha, d, a.sym, a.n), eb) +
                                 bracket(alpha, ea, derext_action(alpha, d, b.sym, b.n));
                if (!(lhs - rhs).is_zero())
                    return {false, std::string(der_name(d)) + " is not a derivation on (" + gen_str(a) + ", " +
                                       gen_str(b) + "): " + (lhs - rhs).str()};
            }
    // sl(2) relations among the derivations, as commutators of their actions
    if (ders.size() == 3) {
        for (Der x : ders)
            for (Der y : ders) {
                auto coef = derext_bracket(x, y);
                for (const Gen& a : gens) {
                    SCAElement lhs = derext_action(alpha, x, derext_action(alpha, y, a.sym, a.n)) -
                                     derext_action(alpha, y, derext_action(alpha, x, a.sym, a.n));
                    SCAElement rhs;
                    for (Der z : ders) rhs += coef[static_cast<int>(z)] * derext_action(alpha, z, a.sym, a.n);
                    if (!(lhs - rhs).is_zero())
                        return {false, "sl(2) relation [" + std::string(der_name(x)) + ", " + std::string(der_name(y)) +
                                           "] fails on " + gen_str(a)};
                }
            }
    }
    return {};
}

std::vector<std::string> table_lines(const Scalar& alpha, int window) {
    const auto gens = basis(window);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            const SCAElement e = bracket(alpha, gens[i].sym, gens[i].n, gens[j].sym, gens[j].n);
            if (e.is_zero()) continue;
            out.push_back("[" + gen_str(gens[i]) + ", " + gen_str(gens[j]) + "] = " + e.str());
        }
    return out;
}

std::vector<TableDiff> vf_table_diff(const Scalar& alpha, int window) {
    const auto gens = basis(window);
    std::vector<SuperVectorField> fields;
    fields.reserve(gens.size());
    for (const Gen& g : gens) fields.push_back(vf_realize(alpha, g.sym, g.n));
    std::vector<TableDiff> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const SuperVectorField got = vf_bracket(fields[i], fields[j]);
            const SCAElement e = bracket(alpha, gens[i].sym, gens[i].n, gens[j].sym, gens[j].n);
            const SuperVectorField want = vf_realize(alpha, e);
            if (!(got == want))
                out.push_back({"[" + gen_str(gens[i]) + ", " + gen_str(gens[j]) + "]", e.centerless().str(), got.str()});
        }
    return out;
}

JacobiReport check_spectral_flow(const Scalar& alpha, int window) {
    std::vector<Gen> gens;
    for (Sym s : {Sym::L, Sym::H, Sym::h, Sym::p})
        for (int n = -window; n <= window; ++n) gens.push_back({s, n});
    for (const Gen& a : gens)
        for (const Gen& b : gens) {
            const SCAElement lhs = spectral_flow(alpha, bracket(alpha, a.sym, a.n, b.sym, b.n));
            const SCAElement rhs =
                n2_bracket(spectral_flow(alpha, SCAElement::gen(a.sym, a.n)), spectral_flow(alpha, SCAElement::gen(b.sym, b.n)));
            if (!(lhs == rhs))
                return {false, "flow of [" + gen_str(a) + ", " + gen_str(b) + "]: " + lhs.str(true) + " vs " + rhs.str(true)};
        }
    return {};
}

JacobiReport check_F_identification(const Scalar& alpha, int window) {
    const SuperVectorField f = vf_F_derivation(alpha);
    for (const Gen& a : basis(window)) {
        const SuperVectorField got = vf_bracket(f, vf_realize(alpha, a.sym, a.n));
        const SuperVectorField want = vf_realize(alpha, derext_action(alpha, Der::F, a.sym, a.n));
        if (!(got == want)) return {false, "[F, " + gen_str(a) + "]: " + got.str() + " vs " + want.str()};
    }
    return {};
}

std::string_view ksym_name(KSym s) {
    switch (s) {
    case KSym::Delta: return "Delta";
    case KSym::L: return "L";
    case KSym::H: return "H";
    case KSym::Lambda: return "Lambda";
    case KSym::d: return "d";
    case KSym::dstar: return "d*";
    case KSym::dc: return "d_c";
    case KSym::dcstar: return "d_c*";
    }
    return "?";
}

KElement kahler_bracket(KSym a, KSym b) {
    using K = KSym;
    auto fwd = [](K x, K y, KElement& r) {
        auto one = [&](K z, int c) { r[z] = Scalar(c); };
        if (x == K::L && y == K::Lambda) return one(K::H, 1), true;
        if (x == K::H && y == K::L) return one(K::L, 2), true;
        if (x == K::H && y == K::Lambda) return one(K::Lambda, -2), true;
        if (x == K::d && y == K::dstar) return one(K::Delta, 1), true;
        if (x == K::dc && y == K::dcstar) return one(K::Delta, 1), true;
        if (x == K::H && y == K::d) return one(K::d, 1), true;
        if (x == K::H && y == K::dstar) return one(K::dstar, -1), true;
        if (x == K::H && y == K::dc) return one(K::dc, 1), true;
        if (x == K::H && y == K::dcstar) return one(K::dcstar, -1), true;
        if (x == K::L && y == K::dstar) return one(K::dc, -1), true;
        if (x == K::L && y == K::dcstar) return one(K::d, 1), true;
        if (x == K::Lambda && y == K::d) return one(K::dcstar, 1), true;
        if (x == K::Lambda && y == K::dc) return one(K::dstar, -1), true;
        return false;
    };
    KElement out;
    if (fwd(a, b, out)) return out;
    if (fwd(b, a, out) && !(kparity(a) && kparity(b)))
        for (auto& [k, v] : out) v = -v;
    return out;
}

SCAElement psi(KSym s, bool lifted) {
    switch (s) {
    case KSym::Delta: return L0_element(Scalar(0));
    case KSym::L: return SCAElement::gen(Sym::E, -1);
    case KSym::H: {
        SCAElement e = SCAElement::gen(Sym::H, 0);
        if (lifted) e += SCAElement::central(Scalar::frac(-1, 6));
        return e;
    }
    case KSym::Lambda: return SCAElement::gen(Sym::F, 1);
    case KSym::d: return SCAElement::gen(Sym::h, 0);
    case KSym::dstar: return SCAElement::gen(Sym::p, 0, Scalar(-1));
    case KSym::dc: return SCAElement::gen(Sym::x, -1);
    case KSym::dcstar: return SCAElement::gen(Sym::y, 1);
    }
    throw std::invalid_argument("unknown Kahler symbol");
}

SCAElement psi(const KElement& k, bool lifted) {
    SCAElement out;
    for (const auto& [s, c] : k) out += c * psi(s, lifted);
    return out;
}

// ---- super vector fields ----

namespace {

// theta-monomial product sign, 0 if a theta repeats
int grassmann_sign(int a, int b) {
    if (a & b) return 0;
    // only theta2 * theta1 needs a swap
    return ((a & 2) && (b & 1)) ? -1 : 1;
}

}  // namespace

void SuperFunction::add(int tpow, int mask, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({tpow, mask}, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

SuperFunction& SuperFunction::operator*=(const Scalar& s) {
    SuperFunction r;
    for (const auto& [k, c] : terms_) r.add(k.first, k.second, c * s);
    *this = r;
    return *this;
}

SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
    SuperFunction r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const int s = grassmann_sign(ka.second, kb.second);
            if (s) r.add(ka.first + kb.first, ka.second | kb.second, ca * cb * Scalar(s));
        }
    return r;
}

SuperFunction SuperFunction::dt() const {
    SuperFunction r;
    for (const auto& [k, c] : terms_) r.add(k.first - 1, k.second, c * Scalar(k.first));
    return r;
}

SuperFunction SuperFunction::dtheta(int i) const {
    const int bit = i == 1 ? 1 : 2;
    SuperFunction r;
    for (const auto& [k, c] : terms_) {
        if (!(k.second & bit)) continue;
        // left derivative: pass the thetas standing before theta_i
        const int before = std::popcount(static_cast<unsigned>(k.second & (bit - 1)));
        r.add(k.first, k.second & ~bit, (before & 1) ? -c : c);
    }
    return r;
}

std::string SuperFunction::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")t^" + std::to_string(k.first);
        if (k.second & 1) s += "θ1";
        if (k.second & 2) s += "θ2";
    }
    return s;
}

std::string SuperVectorField::str() const {
    static const char* names[] = {"∂t", "∂1", "∂2"};
    std::string s;
    for (int a = 0; a < 3; ++a) {
        if (coef[a].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + coef[a].str() + "]" + names[a];
    }
    return s.empty() ? "0" : s;
}

namespace {

SuperFunction mono(int tpow, int mask, const Scalar& c) {
    SuperFunction f;
    f.add(tpow, mask, c);
    return f;
}

}  // namespace

SuperVectorField vf_realize(const Scalar& alpha, Sym s, int n) {
    SuperVectorField x;
    x.parity = parity(s);
    auto& ft = x.coef[0];
    auto& f1 = x.coef[1];
    auto& f2 = x.coef[2];
    const Scalar na = Scalar(n) + alpha;
    switch (s) {
    case Sym::L: {
        // -t^n (t d_t + (n + alpha + 1)/2 (theta1 d_1 + theta2 d_2))
        const Scalar w = -half(na + Scalar(1));
        ft = mono(n + 1, 0, Scalar(-1));
        f1 = mono(n, 1, w);
        f2 = mono(n, 2, w);
        break;
    }
    case Sym::E: f1 = mono(n, 2, Scalar(1)); break;
    case Sym::H:
        f2 = mono(n, 2, Scalar(1));
        f1 = mono(n, 1, Scalar(-1));
        break;
    case Sym::F: f2 = mono(n, 1, Scalar(1)); break;
    case Sym::h:
        ft = mono(n, 2, Scalar(1));
        f1 = mono(n - 1, 3, -na);
        break;
    case Sym::p: f2 = mono(n + 1, 0, Scalar(-1)); break;
    case Sym::x: f1 = mono(n + 1, 0, Scalar(1)); break;
    case Sym::y:
        ft = mono(n, 1, Scalar(1));
        f2 = mono(n - 1, 3, na);
        break;
    }
    return x;
}

SuperVectorField vf_realize(const Scalar& alpha, const SCAElement& a) {
    SuperVectorField out;
    auto p = a.parity();
    if (!p) throw std::invalid_argument("vector field realization of an inhomogeneous element");
    out.parity = *p;
    for (const auto& [g, c] : a.terms()) {
        SuperVectorField v = vf_realize(alpha, g.sym, g.n);
        for (int i = 0; i < 3; ++i) {
            v.coef[i] *= c;
            out.coef[i] += v.coef[i];
        }
    }
    return out;
}

SuperVectorField vf_F_derivation(const Scalar& alpha) {
    if (!is_integer(alpha)) throw unsupported_operation("t^{-alpha} needs integer alpha");
    SuperVectorField x;
    x.parity = 0;
    x.coef[0] = mono(-static_cast<int>(alpha.re().convert_to<long>()), 3, Scalar(-1));
    return x;
}

SuperFunction vf_apply(const SuperVectorField& x, const SuperFunction& f) {
    SuperFunction r = x.coef[0] * f.dt();
    r += x.coef[1] * f.dtheta(1);
    r += x.coef[2] * f.dtheta(2);
    return r;
}

SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y) {
    SuperVectorField r;
    r.parity = (x.parity + y.parity) & 1;
    const Scalar sign = (x.parity && y.parity) ? Scalar(-1) : Scalar(1);
    for (int a = 0; a < 3; ++a) {
        r.coef[a] = vf_apply(x, y.coef[a]);
        SuperFunction back = vf_apply(y, x.coef[a]);
        back *= -sign;
        r.coef[a] += back;
    }
    return r;
}

SuperFunction divergence(const SuperVectorField& x) {
    SuperFunction r = x.coef[0].dt();
    for (int i = 1; i <= 2; ++i) {
        for (const auto& [k, c] : x.coef[i].terms()) {
            const int p = std::popcount(static_cast<unsigned>(k.second)) & 1;
            SuperFunction t = mono(k.first, k.second, p ? -c : c).dtheta(i);
            r += t;
        }
    }
    return r;
}

SuperFunction twisted_divergence(const Scalar& alpha, const SuperVectorField& x) {
    SuperFunction r = divergence(x);
    for (const auto& [k, c] : x.coef[0].terms()) r.add(k.first - 1, k.second, alpha * c);
    return r;
}

}  // namespace sweil::sca
