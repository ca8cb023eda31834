#include "sweil/builders.hpp"

#include <doctest.h>

using namespace sweil;
using namespace sweil::fieldops;
using algebra::parse_backend;
using fock::Box;
using fock::enumerate_box;
using fock::parse_monomial;

namespace {

const Scalar kHalf = Scalar::frac(1, 2);

FockVector apply_with(const CompiledOperator& op, const Monomial& m) {
    FockVector out;
    const auto& coefs = op.coefficients();
    op.for_each(m, [&](const Monomial& w, std::int64_t mult, std::uint32_t idx) {
        out.add(w, coefs[idx] * Scalar(static_cast<long long>(mult)));
    });
    return out;
}

FockVector vec(const std::string& text, Scalar c = Scalar(1)) { return FockVector(parse_monomial(text), c); }

// output of op on m respects the declared shifts
void check_grading(const FieldOperator& op, const std::vector<Monomial>& box, bool relative = false) {
    for (const Monomial& m : box) {
        const auto din = fock::energy_and_degrees(m, relative);
        const FockVector out = op.apply(m);
        for (const auto& [w, c] : out.terms()) {
            const auto dout = fock::energy_and_degrees(w, relative);
            INFO(op.name(), " on ", fock::to_text(m), " -> ", fock::to_text(w));
            CHECK(dout.energy - din.energy == op.grading().energy);
            CHECK(dout.deg_s - din.deg_s == op.grading().deg_s);
            CHECK(dout.deg_l - din.deg_l == op.grading().deg_l);
        }
    }
}

}  // namespace

TEST_CASE("theta(L_0) is the energy on fmu(0,0)") {
    const auto b = parse_backend("fmu:0:0");
    const auto l0 = build_witt_rep(b, 0);
    CHECK(l0.apply(fock::vacuum()).is_zero());
    for (const Monomial& m : enumerate_box(1, Box{3, 2})) {
        INFO(fock::to_text(m));
        CHECK(l0.apply(m) == FockVector(m, Scalar(fock::energy(m))));
    }
}

TEST_CASE("fmu(-1,1) reproduces the adjoint Witt representation") {
    const auto f = parse_backend("fmu:-1:1");
    const auto w = parse_backend("witt");
    const auto box = enumerate_box(1, Box{2, 1});
    for (int n = -2; n <= 2; ++n) {
        const auto a = build_witt_rep(f, n), t = build_theta_adjoint(w, 0, n);
        for (const Monomial& m : box) CHECK(a.apply(m) == t.apply(m));
    }
    CHECK_THROWS(build_witt_rep(w, 0));
    CHECK_THROWS(build_theta_adjoint(f, 0, 0));
}

TEST_CASE("theta on loop algebras") {
    const auto ab = parse_backend("loop:abelian:2");
    const auto sl2 = parse_backend("loop:sl2");
    const auto box = enumerate_box(2, Box{2, 1});
    for (int n = -1; n <= 1; ++n)
        for (const Monomial& m : box) CHECK(build_theta(ab, 1, n).apply(m).is_zero());
    for (int j = 0; j < 3; ++j) CHECK(build_theta(sl2, j, 0).apply(fock::vacuum()).is_zero());
    const auto sbox = enumerate_box(3, Box{2, 1});
    for (int j = 0; j < 3; ++j)
        for (int n = -1; n <= 1; ++n) check_grading(build_theta(sl2, j, n), sbox);
}

TEST_CASE("N=2 central terms on the vacuum") {
    for (const auto& [desc, want] :
         std::vector<std::pair<std::string, Scalar>>{{"fmu:0:0", Scalar(1)}, {"fmu:1/2:0", Scalar(0)},
                                                      {"fmu:-1:1", Scalar(3)}, {"loop:abelian:1", Scalar(1)},
                                                      {"loop:sl2", Scalar(3)}}) {
        const auto b = parse_backend(desc);
        const auto c = super_commutator(build_n2_family(b, Sym::H, 1), build_n2_family(b, Sym::H, -1));
        INFO(desc);
        CHECK(c.apply(fock::vacuum()) == FockVector(fock::vacuum(), want));
    }
}

TEST_CASE("Koszul differential") {
    const auto b = parse_backend("loop:abelian:1");
    const auto h = build_koszul_h(b);
    CHECK(h.apply(fock::vacuum()).is_zero());
    CHECK(h.apply(parse_monomial("b(1,0) |")) == vec("| t(1,0)"));
    CHECK(h.apply(parse_monomial("| e(1,+1)")) == vec("g(1,+1) |"));
    const auto box = enumerate_box(1, Box{3, 2});
    check_grading(h, box);
    for (const Monomial& m : box) CHECK(h.apply(h.apply(m)).is_zero());
}

TEST_CASE("h_1 on beta_0 vac") {
    const auto b = parse_backend("loop:abelian:1");
    const auto h1 = build_n2_family(b, Sym::h, 1);
    // m = -1 contracts gamma_0 with beta_0; m = 0 creates gamma_1 tau_0
    FockVector want = vec("| t(1,-1)") + vec("g(1,+1) b(1,0) | t(1,0)");
    CHECK(h1.apply(parse_monomial("b(1,0) |")) == want);
}

TEST_CASE("S'(2,alpha) constants and alpha = 0 agreement") {
    for (int d : {1, 3}) {
        const auto b = parse_backend(d == 1 ? "loop:abelian:1" : "loop:sl2");
        for (const Scalar& a : {Scalar(0), kHalf, Scalar(1)}) {
            const Scalar want = (a / Scalar(4) - a * a / Scalar(8)) * Scalar(d);
            CHECK(build_s2alpha_family(b, a, Sym::L, 0).apply(fock::vacuum()) == FockVector(fock::vacuum(), want));
        }
        const auto box = enumerate_box(d, Box{2, 1});
        for (Sym s : {Sym::h, Sym::p})
            for (int n = -1; n <= 1; ++n) {
                const auto x = build_s2alpha_family(b, Scalar(0), s, n), y = build_n2_family(b, s, n);
                for (const Monomial& m : box) CHECK(x.apply(m) == y.apply(m));
            }
        for (Sym s : kAllSyms)
            for (int n = -1; n <= 1; ++n) check_grading(build_s2alpha_family(b, kHalf, s, n), box);
    }
    // E_0 vac has an empty window; E_1 vac keeps the single m = 1 term per component
    const Scalar mi2 = -Scalar::i() * kHalf;
    CHECK(build_s2alpha_family(parse_backend("loop:abelian:2"), Scalar(0), Sym::E, 0).apply(fock::vacuum()).is_zero());
    CHECK(build_s2alpha_family(parse_backend("loop:abelian:1"), Scalar(0), Sym::E, 1).apply(fock::vacuum()) ==
          vec("g(1,+1) g(1,+1) |", mi2));
    const auto e1 = build_s2alpha_family(parse_backend("loop:abelian:2"), Scalar(0), Sym::E, 1).apply(fock::vacuum());
    CHECK(e1 == vec("g(1,+1) g(1,+1) |", mi2) + vec("g(2,+1) g(2,+1) |", mi2));
    CHECK_THROWS(build_s2alpha_family(parse_backend("witt"), Scalar(0), Sym::E, 0));
}

TEST_CASE("differential d") {
    const auto sl2 = parse_backend("loop:sl2");
    const auto d = build_differential_d(sl2).d;
    CHECK(d.apply(fock::vacuum()).is_zero());
    CHECK(d.parity() == 1);
    CHECK(d.grading() == Grading{1, 0, 0, 1});
    const auto box = enumerate_box(3, Box{2, 1});
    check_grading(d, box);
    const auto ab = build_differential_d(parse_backend("loop:abelian:2")).d;
    for (const Monomial& m : enumerate_box(2, Box{2, 1})) CHECK(ab.apply(m).is_zero());
    CHECK_THROWS(build_differential_d(parse_backend("fmu:0:0")));
}

TEST_CASE("sl2 of exterior derivations") {
    const auto b = parse_backend("loop:abelian:1");
    const auto ee = build_sl2_EHF(b, Der::E), hh = build_sl2_EHF(b, Der::H);
    const Monomial vr = fock::relative_vacuum(1);
    CHECK(hh.apply(vr).is_zero());
    // pinned sign: EE tau_{-2} vac_rel = -2i eps_2 vac_rel
    CHECK(ee.apply(parse_monomial("| t(1,-2) t(1,0)")) == vec("| e(1,+2) t(1,0)", Scalar(-2) * Scalar::i()));
    CHECK_THROWS(build_sl2_EHF(parse_backend("witt"), Der::E));
}

// mode-0 eps terms of d remove a tau_0 and leave the relative model
TEST_CASE("d1 and d2 split the relative part of d") {
    const auto b = parse_backend("loop:sl2");
    const auto d = build_differential_d(b).d;
    const auto [d1, d2] = split_d1_d2(d);
    const auto dc = build_dc(d);
    Box box{2, 1, true};
    for (const Monomial& m : enumerate_box(3, box)) {
        const auto base = fock::energy_and_degrees(m, true);
        FockVector rel;
        const FockVector full = d.apply(m);
        for (const auto& [w, c] : full.terms())
            if (fock::is_relative(w, 3)) rel.add(w, c);
        CHECK(d1.apply(m) + d2.apply(m) == rel);
        CHECK(dc.apply(m) == Scalar::i() * (d1.apply(m) - d2.apply(m)));
        const FockVector o1 = d1.apply(m), o2 = d2.apply(m);
        for (const auto& [w, c] : o1.terms()) {
            const auto o = fock::energy_and_degrees(w, true);
            CHECK(o.a == base.a + 1);
            CHECK(o.b == base.b);
        }
        for (const auto& [w, c] : o2.terms()) {
            const auto o = fock::energy_and_degrees(w, true);
            CHECK(o.a == base.a);
            CHECK(o.b == base.b - 1);
        }
    }
}

TEST_CASE("widening the window changes nothing") {
    const auto b = parse_backend("loop:sl2");
    std::vector<FieldOperator> ops{build_differential_d(b).d, build_theta(b, 0, 1), build_theta(b, 2, -2),
                                   build_s2alpha_family(b, kHalf, Sym::L, 1), build_s2alpha_family(b, kHalf, Sym::y, -1),
                                   build_s2alpha_family(b, kHalf, Sym::E, 0), build_koszul_h(b)};
    const auto box = enumerate_box(3, Box{2, 1});
    for (const auto& op : ops) {
        const auto wide = op.compiled(6);
        for (const Monomial& m : box) {
            INFO(op.name(), " on ", fock::to_text(m));
            CHECK(apply_with(*wide, m) == op.apply(m));
        }
    }
}

TEST_CASE("odd squares and super commutators") {
    const auto b = parse_backend("loop:sl2");
    const auto h0 = build_s2alpha_family(b, Scalar(0), Sym::h, 0);
    const auto sq = super_commutator(h0, h0);
    for (const Monomial& m : enumerate_box(3, Box{2, 1})) CHECK(sq.apply(m).is_zero());
    // [h_n, p_k] = L_{n+k} - (k - n + 1)/2 H_{n+k} + cocycle
    const auto box = enumerate_box(3, Box{2, 1});
    for (int n = -1; n <= 1; ++n)
        for (int k = -1; k <= 1; ++k) {
            const auto lhs = super_commutator(build_s2alpha_family(b, Scalar(0), Sym::h, n),
                                              build_s2alpha_family(b, Scalar(0), Sym::p, k));
            const auto l = build_s2alpha_family(b, Scalar(0), Sym::L, n + k);
            const auto h = build_s2alpha_family(b, Scalar(0), Sym::H, n + k);
            const Scalar cc = n == -k ? Scalar(9) * Scalar::frac(1, 6) * Scalar(n * n - n) : Scalar(0);
            for (const Monomial& m : box) {
                FockVector rhs = l.apply(m) - Scalar::frac(k - n + 1, 2) * h.apply(m) + FockVector(m, cc);
                CHECK(lhs.apply(m) == rhs);
            }
        }
}
