#include "sweil/builders.hpp"
#include "sweil/verify.hpp"

#include <doctest.h>

using namespace sweil;
using namespace sweil::verify;
using algebra::parse_backend;
using sca::Gen;

namespace {

Settings small(int emax, int b0max, int jobs = 1) {
    Settings s;
    s.window = 2;
    s.box = {emax, b0max, false};
    s.jobs = jobs;
    return s;
}

}  // namespace

TEST_CASE("central charge 3 - 6 lambda and 3 dim") {
    CHECK(extract_central_charge(parse_backend("fmu:0:0")) == Scalar(3));
    CHECK(extract_central_charge(parse_backend("fmu:-1:1")) == Scalar(9));
    CHECK(extract_central_charge(parse_backend("fmu:1/2:0")) == Scalar(0));
    CHECK(extract_central_charge(parse_backend("fmu:1/4:3")) == Scalar::frac(3, 2));
    CHECK(extract_central_charge(parse_backend("loop:abelian:1")) == Scalar(3));
    CHECK(extract_central_charge(parse_backend("loop:abelian:2")) == Scalar(6));
    CHECK(extract_central_charge(parse_backend("loop:sl2")) == Scalar(9));
    CHECK(claimed_central_charge(parse_backend("fmu:1/2:0")) == Scalar(0));
}

TEST_CASE("N=2 suites on small boxes") {
    for (const char* d : {"fmu:0:0", "fmu:-1:1", "fmu:1/2:0", "fmu:1/3:1/2", "loop:abelian:1"}) {
        auto r = check_n2(parse_backend(d), small(2, 2));
        INFO(d);
        CHECK(r.pass);
        CHECK(r.relations == 210);
    }
    CHECK(check_n2(parse_backend("loop:sl2"), small(1, 1)).pass);
}

TEST_CASE("S'(2,alpha) suites on small boxes") {
    const auto b = parse_backend("loop:sl2");
    for (const Scalar& a : {Scalar(0), Scalar::frac(1, 2), Scalar(1), Scalar::frac(-2, 3)}) {
        auto r = check_s2a(b, a, small(1, 1));
        INFO(a.str());
        CHECK(r.pass);
    }
    CHECK(check_s2a(parse_backend("loop:abelian:2"), Scalar::frac(1, 2), small(2, 1)).pass);
    CHECK_THROWS(check_s2a(parse_backend("fmu:0:0"), Scalar(0), small(1, 1)));
}

TEST_CASE("mutations are caught with a witness") {
    const auto b = parse_backend("loop:sl2");
    const Scalar a = Scalar::frac(1, 2);
    const std::vector<Sym> syms{std::begin(kAllSyms), std::end(kAllSyms)};
    auto table = [&](const Gen& x, const Gen& y) { return sca::bracket(a, x.sym, x.n, y.sym, y.n); };
    auto rep = [&](Sym s, int n) { return fieldops::build_s2alpha_family(b, a, s, n); };
    const Settings s = small(1, 1);

    // coefficient function of x_n off by a factor
    auto bad_rep = [&](Sym sy, int n) {
        auto op = rep(sy, n);
        return sy == Sym::x ? op.scaled(Scalar(2)) : op;
    };
    auto r1 = check_representation("mut-rep", b, syms, bad_rep, table, Scalar(9), s);
    CHECK_FALSE(r1.pass);
    REQUIRE(r1.witness);
    CHECK(r1.witness->lhs != r1.witness->rhs);

    // structure constant [h, p] off by +1 on the L coefficient
    auto bad_table = [&](const Gen& x, const Gen& y) {
        auto e = table(x, y);
        if ((x.sym == Sym::h && y.sym == Sym::p) || (x.sym == Sym::p && y.sym == Sym::h)) e.add({Sym::L, x.n + y.n}, Scalar(1));
        return e;
    };
    CHECK_FALSE(check_representation("mut-table", b, syms, rep, bad_table, Scalar(9), s).pass);
    // central charge off by one
    auto r3 = check_representation("mut-c", b, syms, rep, table, Scalar(10), s);
    CHECK_FALSE(r3.pass);
    // the witness does not depend on the thread count
    auto r4 = check_representation("mut-rep", b, syms, bad_rep, table, Scalar(9), small(1, 1, 3));
    REQUIRE(r4.witness);
    CHECK(r4.witness->state == r1.witness->state);
    CHECK(r4.witness->relation == r1.witness->relation);
}

TEST_CASE("chain identities") {
    for (const auto& r : check_chain(parse_backend("witt"), small(3, 2))) {
        INFO(r.check);
        CHECK(r.pass);
    }
    for (const auto& r : check_chain(parse_backend("loop:sl2"), small(1, 1))) {
        INFO(r.check);
        CHECK(r.pass);
    }
    for (const auto& r : check_chain(parse_backend("loop:abelian:2"), small(2, 1))) CHECK(r.pass);
    CHECK_THROWS(check_chain(parse_backend("fmu:0:0"), small(1, 1)));
}

TEST_CASE("d-compatibility and relative exterior sl(2)") {
    const auto b = parse_backend("loop:sl2");
    CHECK(check_d_compat(b, small(1, 1)).pass);
    const auto rel = check_relative_derext(b, small(2, 1));
    REQUIRE(rel.size() == 3);
    CHECK(rel[0].pass);
    CHECK(rel[1].pass);
    CHECK(rel[2].pass);
    REQUIRE(rel[2].witness);
    CHECK(rel[2].witness->state == "vac");
}
