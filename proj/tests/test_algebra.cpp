#include "doctest.h"
#include "sweil/backend.hpp"

using namespace sweil::algebra;

TEST_CASE("scalar text round trip") {
    Scalar a = Scalar::parse("-3/2+1/4i");
    CHECK(a.re() == Rational(-3, 2));
    CHECK(a.im() == Rational(1, 4));
    CHECK(a.str() == "-3/2+1/4i");
    CHECK(Scalar::parse("2i").str() == "2i");
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("7").str() == "7");
    CHECK(Scalar(0).str() == "0");
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("scalar field laws") {
    Scalar a = Scalar::parse("1/3-2i"), b = Scalar::parse("-5/7+1/2i");
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(ipow(3) == -Scalar::i());
    CHECK(ipow(-1) == -Scalar::i());
    CHECK(a.denominator() == 3);
    CHECK_THROWS(a / Scalar(0));
}

TEST_CASE("jacobi") {
    CHECK(check_jacobi(abelian_algebra(3)).pass);
    auto sl2 = builtin_sl2_orthonormal();
    CHECK(check_jacobi(sl2).pass);
    // [x1, x2] is a nonzero multiple of x3
    CHECK(sl2.c(0, 1, 2) == Scalar(0, -2));
    CHECK(sl2.c(0, 1, 0).is_zero());
    CHECK(sl2.c(0, 1, 1).is_zero());

    auto bad = sl2;
    bad.c(1, 2, 0) = -bad.c(1, 2, 0);
    auto r = check_jacobi(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());

    // antisymmetric but not Lie: [x1,x2] = x2, [x2,x3] = x1
    auto nl = abelian_algebra(3);
    nl.c(0, 1, 1) = 1;
    nl.c(1, 0, 1) = -1;
    nl.c(1, 2, 0) = 1;
    nl.c(2, 1, 0) = -1;
    auto r2 = check_jacobi(nl);
    CHECK_FALSE(r2.pass);
    CHECK(r2.witness.has_value());

    LieAlgebraSpec broken = sl2;
    broken.constants.pop_back();
    CHECK_THROWS(check_jacobi(broken));
}

TEST_CASE("invariant form") {
    auto one = abelian_algebra(1);
    CHECK(check_invariant_form(one).pass);
    auto sl2 = builtin_sl2_orthonormal();
    CHECK(sl2.has_identity_form());
    CHECK(check_invariant_form(sl2).pass);
    auto degen = sl2;
    (*degen.form)[8] = Scalar(0);
    auto r = check_invariant_form(degen);
    CHECK_FALSE(r.pass);
    CHECK(r.message.find("degenerate") != std::string::npos);
    auto none = sl2;
    none.form.reset();
    CHECK_THROWS_AS(check_invariant_form(none), unsupported_operation);
}

TEST_CASE("backend brackets") {
    auto w = witt_backend();
    auto v = backend_bracket(w, 0, 2, 0, -1);
    REQUIRE(v.size() == 1);
    CHECK(v[0].second == Scalar(3));
    auto f = fmu_backend(Scalar(0), Scalar(0));
    CHECK(backend_bracket(f, 0, 1, 0, 0).empty());
    auto f2 = fmu_backend(Scalar(-1), Scalar(1));
    // adjoint case: phi(L_m) u_n = (m - n) u_{m+n}
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            auto a = backend_bracket(f2, 0, m, 0, n);
            auto b = backend_bracket(w, 0, m, 0, n);
            CHECK(a == b);
        }
    auto ab = parse_backend("loop:abelian:2");
    CHECK(ab.dim() == 2);
    CHECK(backend_bracket(ab, 0, 1, 1, 2).empty());
    CHECK(parse_backend("loop:sl2").dim() == 3);
    CHECK(parse_backend("fmu:1/2:0").lambda == Scalar::frac(1, 2));
    CHECK_THROWS(parse_backend("loop:so3"));
    CHECK_THROWS(parse_backend("fmu:1"));
}
