#include "sweil/builders.hpp"
#include "sweil/cohomology.hpp"
#include "sweil/hermitian.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace sweil;
using namespace sweil::cohomology;
using algebra::parse_backend;
using fock::parse_monomial;

namespace {

Monomial rel(const std::string& creators, int dim) {
    // appends the mode-0 taus of the relative vacuum
    Monomial m = parse_monomial(creators);
    for (int u = 0; u < dim; ++u) m.insert_fermion(fock::pack({fock::Family::tau, u, 0}));
    return m;
}

}  // namespace

TEST_CASE("assemble_matrix on small pieces") {
    const auto ab1 = parse_backend("loop:abelian:1");
    const GradedPiece src = piece_of(1, false, {parse_monomial("b(1,0) |")});
    const GradedPiece tgt = piece_of(1, false, {parse_monomial("| t(1,0)")});
    const SparseMatrix h = assemble_matrix(fieldops::build_koszul_h(ab1), src, tgt);
    REQUIRE(h.rows == 1);
    REQUIRE(h.cols == 1);
    CHECK(to_dense(h)(0, 0) == Scalar(1));

    const FieldOperator zero("zero", {}, {});
    CHECK(assemble_matrix(zero, src, src).is_zero());
    const auto d = fieldops::build_differential_d(ab1).d;
    for (int l = -2; l <= 1; ++l) {
        const GradedPiece p = absolute_piece(ab1, 2, 0, l), q = absolute_piece(ab1, 2, 0, l + 1);
        CHECK(assemble_matrix(d, p, q).is_zero());
    }
    // leaving the target is a structural error
    CHECK_THROWS_AS(assemble_matrix(fieldops::build_koszul_h(ab1), src, src), std::domain_error);
}

TEST_CASE("relative projection") {
    const auto sl2 = parse_backend("loop:sl2");
    const auto ab1 = parse_backend("loop:abelian:1");
    for (const GradedPiece& p : relative_pieces(ab1, 2, 0)) CHECK(relative_projection(ab1, p).dim() == p.ambient());

    // degree-1 polynomials at energy 0 carry the adjoint representation: no invariants
    const auto lin = relative_pieces(sl2, 0, -1, 1);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].ambient() == 3);
    CHECK(relative_projection(sl2, lin[0]).dim() == 0);
    // the quadratic Casimir survives
    const auto quad = relative_pieces(sl2, 0, -2);
    REQUIRE(quad.size() == 1);
    CHECK(quad[0].ambient() == 6);
    CHECK(relative_projection(sl2, quad[0]).dim() == 1);

    const auto vac = relative_pieces(sl2, 0, 0);
    REQUIRE(vac.size() == 1);
    const GradedPiece pv = relative_projection(sl2, vac[0]);
    REQUIRE(pv.dim() == 1);
    CHECK(pv.vector(0) == FockVector(fock::relative_vacuum(3)));
}

TEST_CASE("cohomology tables") {
    SUBCASE("abelian relative: d = 0") {
        const auto b = parse_backend("loop:abelian:1");
        Ranges r;
        r.emax = 2;
        r.relative = true;
        r.hodge = true;
        r.oracle = true;
        const auto rep = cohomology_table(b, fieldops::build_differential_d(b).d, r);
        CHECK(!rep.rows.empty());
        for (const PieceRow& row : rep.rows) {
            CHECK(row.coh_dim == row.dim);
            CHECK(row.harmonic == row.dim);
        }
        CHECK(rep.d_squared_zero);
        CHECK(rep.oracle_agrees);
    }
    SUBCASE("sl2 absolute E = 1, Deg_S = 0") {
        const auto b = parse_backend("loop:sl2");
        Ranges r;
        r.emin = r.emax = 1;
        r.smin = r.smax = 0;
        r.oracle = true;
        const auto rep = cohomology_table(b, fieldops::build_differential_d(b).d, r);
        REQUIRE(rep.rows.size() == 6);
        int euler = 0;
        for (const PieceRow& row : rep.rows) {
            CHECK(row.coh_dim >= 0);
            CHECK(row.dim == row.rank_in + row.rank_out + row.coh_dim);
            euler += (row.deg_l % 2 == 0 ? 1 : -1) * row.dim;
        }
        int euler_h = 0;
        for (const PieceRow& row : rep.rows) euler_h += (row.deg_l % 2 == 0 ? 1 : -1) * row.coh_dim;
        CHECK(euler == euler_h);
        CHECK(rep.d_squared_zero);
        CHECK(rep.oracle_ran);
        CHECK(rep.oracle_agrees);
        CHECK(rep.matrices == 5);
    }
    SUBCASE("sl2 relative E <= 2") {
        const auto b = parse_backend("loop:sl2");
        Ranges r;
        r.emax = 2;
        r.relative = true;
        r.hodge = true;
        r.oracle = true;
        const auto rep = cohomology_table(b, fieldops::build_differential_d(b).d, r);
        CHECK(rep.d_squared_zero);
        CHECK(rep.oracle_agrees);
        CHECK(rep.hodge_consistent);
        for (const PieceRow& row : rep.rows) CHECK(row.coh_dim >= 0);
    }
}

TEST_CASE("ranks do not depend on the enumeration order") {
    const auto b = parse_backend("loop:sl2");
    const auto d = fieldops::build_differential_d(b).d;
    const GradedPiece p = absolute_piece(b, 1, 0, -2), q = absolute_piece(b, 1, 0, -1);
    const int rank = exact_rank(assemble_matrix(d, p, q));
    std::vector<int> pp(p.ambient()), qq(q.ambient());
    std::iota(pp.begin(), pp.end(), 0);
    std::iota(qq.begin(), qq.end(), 0);
    std::reverse(pp.begin(), pp.end());
    std::rotate(qq.begin(), qq.begin() + qq.size() / 3, qq.end());
    CHECK(exact_rank(assemble_matrix(d, permuted(p, pp), permuted(q, qq))) == rank);
    CHECK(rank > 0);
}

TEST_CASE("Koszul acyclicity on single-pair boxes") {
    for (const char* name : {"loop:abelian:1", "loop:sl2"}) {
        const auto boxes = koszul_acyclicity(parse_backend(name));
        CHECK(boxes.size() == 5u * parse_backend(name).dim());
        for (const KoszulBox& k : boxes) {
            INFO(name << " comp " << k.comp << " mode " << k.mode);
            CHECK(k.dim == 9);
            CHECK(k.rank == 4);
            CHECK(k.pass());
        }
    }
}

TEST_CASE("star and the Hermitian forms") {
    const int dim = 1;
    const Monomial vr = fock::relative_vacuum(dim);
    CHECK(fieldops::curly_form(vr, vr, dim) == Scalar(1));
    CHECK(fieldops::star(vr, dim) == FockVector(vr));
    CHECK(fieldops::star(rel("| e(1,+2)", dim), dim) == FockVector(rel("| t(1,-2)", dim)));
    CHECK_THROWS_AS(fieldops::star(parse_monomial("| e(1,+1)"), dim), std::domain_error);

    // adjoint signs respect the canonical (anti)commutators: the coefficients of
    // a dual pair multiply to +1 for fermions and -1 for bosons
    using fock::Family;
    auto c = [](Family f) { return fieldops::adjoint_generator({f, 0, 1}).first; };
    CHECK(c(Family::eps) * c(Family::tau) == Scalar(1));
    CHECK(c(Family::gamma) * c(Family::beta) == Scalar(-1));
    // the sign set eps -> -i, tau -> -i, gamma -> i, beta -> -i does not
    CHECK(-Scalar::i() * -Scalar::i() != Scalar(1));

    // {eps_1 vac_rel, w} by the adjoint rule: i times the vac_rel part of eps_-1 w
    const Monomial x = rel("| e(1,+1)", dim), y = rel("| t(1,-1)", dim);
    for (const Monomial& w : {x, y}) {
        const FockVector moved = fock::apply_generator(fock::GenKey{Family::eps, 0, -1}, FockVector(w));
        CHECK(fieldops::curly_form(x, w, dim) == Scalar::i() * moved.coeff(vr));
    }
    CHECK(fieldops::curly_form(x, y, dim) == Scalar::i());
    CHECK(fieldops::curly_form(x, x, dim) == Scalar(0));

    const auto b = parse_backend("loop:abelian:1");
    const auto box = fock::enumerate_box(1, fock::Box{2, 1, true, std::nullopt, std::nullopt});
    for (const Monomial& m : box) CHECK(fieldops::star(fieldops::star(m, dim), dim) == FockVector(m));
    // (.,.) vanishes between different bidegrees
    for (const Monomial& p : box)
        for (const Monomial& q : box) {
            const auto dp = fock::energy_and_degrees(p, true), dq = fock::energy_and_degrees(q, true);
            if (dp.a != dq.a || dp.b != dq.b) CHECK(fieldops::paren_form(p, q, dim).is_zero());
        }
    for (const GradedPiece& p : relative_pieces(b, 2, 0)) {
        const Matrix g = gram_matrix(p);
        CHECK(g == conj_transpose(g));
    }
}

TEST_CASE("Lefschetz data on relative cohomology") {
    const auto b = parse_backend("loop:sl2");
    Ranges r;
    r.emax = 2;
    r.relative = true;
    int scalar = 0;
    for (const LefschetzRow& row : lefschetz_report(b, r)) {
        INFO(row.energy << " " << row.deg_s << " " << row.deg_l);
        // HH acts by a - b
        if (row.hh_eigenvalue) {
            CHECK(*row.hh_eigenvalue == Scalar(row.deg_l));
            ++scalar;
        }
        CHECK(row.sl2_on_cohomology);
        CHECK(row.ee_closed);
        CHECK(row.ee_exact);
    }
    CHECK(scalar > 10);
}

TEST_CASE("Kahler package") {
    for (const char* name : {"loop:abelian:1", "loop:sl2"}) {
        const auto rep = kahler_report(parse_backend(name), 2, 2);
        INFO(name);
        REQUIRE(rep.checks.size() == 6);
        for (const KahlerCheck& c : rep.checks) {
            INFO(c.name << ": " << c.detail);
            // the Gram adjoint of theta(h_0) is not -theta(p_0): star leaves the bosons alone
            CHECK(c.pass == (c.name.find("adjoint") == std::string::npos));
        }
        CHECK(rep.pieces.front().gram == Inertia{1, 0, 0});
    }
    CHECK_THROWS(kahler_report(parse_backend("witt"), 1, 0));
}
