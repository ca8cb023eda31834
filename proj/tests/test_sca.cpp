#include "sweil/sca.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <string>

using namespace sweil;
using namespace sweil::sca;
using algebra::Scalar;

namespace {

const Scalar kHalf = Scalar::frac(1, 2);

}  // namespace

TEST_CASE("n2 table examples") {
    SCAElement v = n2_bracket(Sym::L, 2, Sym::L, -2);
    SCAElement want = SCAElement::gen(Sym::L, 0, Scalar(4)) + SCAElement::central(kHalf);
    CHECK(v == want);
    CHECK(n2_bracket(Sym::H, 1, Sym::H, -1) == SCAElement::central(Scalar::frac(1, 3)));
    // [h_n, p_k] = L + (n - k - 1)/2 H + C/6 (n^2 - n) delta
    for (int n = -3; n <= 3; ++n)
        for (int k = -3; k <= 3; ++k) {
            SCAElement w = SCAElement::gen(Sym::L, n + k);
            w.add({Sym::H, n + k}, Scalar::frac(n - k - 1, 2));
            if (n == -k) w += SCAElement::central(Scalar::frac(n * n - n, 6));
            CHECK(n2_bracket(Sym::h, n, Sym::p, k) == w);
            CHECK(n2_bracket(Sym::p, k, Sym::h, n) == w);
        }
    CHECK(n2_bracket(Sym::h, 1, Sym::h, 0).is_zero());
    CHECK_THROWS(n2_bracket(Sym::E, 0, Sym::h, 0));
}

TEST_CASE("s2alpha table examples") {
    const Scalar a0(0);
    CHECK(bracket(a0, Sym::L, 2, Sym::L, -2) == SCAElement::gen(Sym::L, 0, Scalar(4)) + SCAElement::central(kHalf));
    CHECK(bracket(a0, Sym::E, 1, Sym::F, -1) == SCAElement::gen(Sym::H, 0) + SCAElement::central(Scalar::frac(1, 6)));
    CHECK(bracket(a0, Sym::E, -1, Sym::F, 1) ==
          SCAElement::gen(Sym::H, 0) + SCAElement::central(Scalar::frac(-1, 6)));
    CHECK(bracket(a0, Sym::F, 1, Sym::E, -1) ==
          SCAElement::gen(Sym::H, 0, Scalar(-1)) + SCAElement::central(Scalar::frac(1, 6)));
    // odd-odd brackets are symmetric
    CHECK(bracket(kHalf, Sym::h, 1, Sym::p, 2) == bracket(kHalf, Sym::p, 2, Sym::h, 1));
    CHECK(bracket(a0, Sym::h, 0, Sym::h, 1).is_zero());
}

TEST_CASE("super-Jacobi and cocycle") {
    for (const Scalar& a : {Scalar(0), kHalf, Scalar(1)}) {
        auto r = check_super_jacobi(a, 2);
        INFO(r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("vector field realization matches the table") {
    for (const Scalar& a : {Scalar(0), kHalf}) {
        for (Sym s : kAllSyms)
            for (int n = -3; n <= 3; ++n) {
                const auto x = vf_realize(a, s, n);
                CHECK(x.parity == parity(s));
                CHECK(twisted_divergence(a, x).is_zero());
                for (Sym t : kAllSyms)
                    for (int k = -3; k <= 3; ++k) {
                        const auto y = vf_realize(a, t, k);
                        const auto want = vf_realize(a, bracket(a, s, n, t, k));
                        const auto got = vf_bracket(x, y);
                        INFO(sym_name(s), n, " ", sym_name(t), k, ": ", got.str(), " vs ", want.str());
                        CHECK(got == want);
                    }
            }
    }
}

TEST_CASE("Grassmann calculus") {
    SuperFunction t1, t2;
    t1.add(0, 1, Scalar(1));
    t2.add(0, 2, Scalar(1));
    auto t12 = t1 * t2;
    auto t21 = t2 * t1;
    t21 *= Scalar(-1);
    CHECK(t12 == t21);
    CHECK((t1 * t1).is_zero());
    // d_2 (theta1 theta2) = -theta1
    auto d2 = t12.dtheta(2);
    auto m1 = t1;
    m1 *= Scalar(-1);
    CHECK(d2 == m1);
    CHECK(t12.dtheta(1) == t2);
}

TEST_CASE("F as a derivation for integer alpha") {
    for (int ai : {0, 1}) {
        const Scalar a(ai);
        const auto f = vf_F_derivation(a);
        for (Sym s : kAllSyms)
            for (int n = -3; n <= 3; ++n) {
                auto got = vf_bracket(f, vf_realize(a, s, n));
                auto want = vf_realize(a, derext_action(a, Der::F, s, n));
                INFO(sym_name(s), n);
                CHECK(got == want);
            }
    }
    CHECK_THROWS(vf_F_derivation(kHalf));
}

TEST_CASE("exterior derivations") {
    for (const Scalar& a : {Scalar(0), Scalar(1), kHalf}) {
        auto r = check_derext_derivations(a, 2);
        INFO(r.witness);
        CHECK(r.pass);
    }
    CHECK_THROWS(derext_action(kHalf, Der::E, Sym::h, 0));
    CHECK(derext_action(kHalf, Der::H, Sym::h, 0) == SCAElement::gen(Sym::h, 0, Scalar(-1)));
    auto ef = derext_bracket(Der::E, Der::F);
    CHECK(ef[1] == Scalar(1));
    auto fe = derext_bracket(Der::F, Der::E);
    CHECK(fe[1] == Scalar(-1));
}

TEST_CASE("spectral flow is a homomorphism") {
    const Sym n2[] = {Sym::L, Sym::H, Sym::h, Sym::p};
    for (const Scalar& a : {kHalf, Scalar(1)})
        for (Sym s : n2)
            for (int n = -3; n <= 3; ++n)
                for (Sym t : n2)
                    for (int k = -3; k <= 3; ++k) {
                        auto lhs = spectral_flow(a, bracket(a, s, n, t, k));
                        auto rhs = n2_bracket(spectral_flow(a, SCAElement::gen(s, n)),
                                              spectral_flow(a, SCAElement::gen(t, k)));
                        INFO(sym_name(s), n, " ", sym_name(t), k);
                        CHECK(lhs == rhs);
                    }
    CHECK_THROWS(spectral_flow(kHalf, SCAElement::gen(Sym::E, 0)));
}

TEST_CASE("degree and L0") {
    const Scalar a = kHalf;
    CHECK(deg(a, Sym::E, 1) == Scalar::frac(3, 2));
    CHECK(deg(a, Sym::y, 0) == Scalar::frac(-1, 2));
    CHECK(deg(a, Sym::h, 2) == Scalar(2));
    // [L0, X_n] = -deg(X_n) X_n ... up to the sign of the grading operator
    const SCAElement l0 = L0_element(a);
    for (Sym s : kAllSyms)
        for (int n = -3; n <= 3; ++n) {
            SCAElement got = bracket(a, l0, SCAElement::gen(s, n));
            INFO(sym_name(s), n);
            CHECK(got == SCAElement::gen(s, n, deg(a, s, n)));
        }
}

TEST_CASE("psi intertwines the Kahler superalgebra") {
    int plain_failures = 0;
    for (KSym a : kAllKSyms)
        for (KSym b : kAllKSyms) {
            const auto k = kahler_bracket(a, b);
            auto lifted = bracket(Scalar(0), psi(a, true), psi(b, true));
            INFO(ksym_name(a), " ", ksym_name(b));
            CHECK(lifted == psi(k, true));
            if (!(bracket(Scalar(0), psi(a), psi(b)) == psi(k))) ++plain_failures;
        }
    // only [L, Lambda] and [Lambda, L] see the cocycle
    CHECK(plain_failures == 2);
    CHECK(kahler_bracket(KSym::d, KSym::dstar) == KElement{{KSym::Delta, Scalar(1)}});
    CHECK(kahler_bracket(KSym::dstar, KSym::d) == KElement{{KSym::Delta, Scalar(1)}});
    CHECK(kahler_bracket(KSym::Lambda, KSym::L) == KElement{{KSym::H, Scalar(-1)}});
}

TEST_CASE("golden table at alpha = 1/2 against the printed formulas") {
    std::ifstream in(std::string(SWEIL_GOLDEN_DIR) + "/s2a_alpha_1_2_window_3.txt");
    REQUIRE(in);
    std::set<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.insert(l);
    CHECK(lines.size() == table_lines(kHalf, 3).size());
    for (const auto& l : table_lines(kHalf, 3)) CHECK(lines.count(l) == 1);

    // [h_n, p_k] = L_{n+k} - (k - n + 1 - alpha)/2 H_{n+k} + C/6 ((n - 1 + (alpha + 1)/2)^2 - 1/4) delta
    const Scalar a = kHalf;
    for (int n = -3; n <= 3; ++n) {
        const int k = -n;
        SCAElement want = SCAElement::gen(Sym::L, 0);
        want.add({Sym::H, 0}, -(Scalar(k - n + 1) - a) * kHalf);
        const Scalar s = Scalar(n - 1) + (a + Scalar(1)) * kHalf;
        want += SCAElement::central((s * s - Scalar::frac(1, 4)) / Scalar(6));
        const std::string line = "[h_" + std::to_string(n) + ", p_" + std::to_string(k) + "] = " + want.str();
        INFO(line);
        CHECK(lines.count(line) == 1);
    }
    CHECK(lines.count("[H_-1, H_1] = -1/3*C") == 1);
    CHECK(lines.count("[h_1, p_-1] = 1*Lalpha_0 + 3/4*H_0 + 5/96*C") == 1);
}
