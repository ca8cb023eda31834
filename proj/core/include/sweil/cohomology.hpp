#pragma once

#include "sweil/backend.hpp"
#include "sweil/fieldops.hpp"
#include "sweil/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sweil::cohomology {

using algebra::GradedBackend;
using fieldops::FieldOperator;
using fock::FockVector;
using fock::Monomial;

// A finite graded piece: ambient monomials of fixed (E, Deg_S, Deg_Lambda),
// or in the relative model of fixed (E, Deg_S, a, b), together with a basis
// of a subspace in ambient coordinates (all monomials unless projected).
struct GradedPiece {
    int components = 0;
    bool relative = false;
    int energy = 0;
    int deg_s = 0;
    int deg_l = 0;  // a - b in the relative model
    std::optional<std::pair<int, int>> ab;
    std::vector<Monomial> monomials;
    std::vector<SparseVec> basis;
    std::map<Monomial, int> index;

    int dim() const { return static_cast<int>(basis.size()); }
    int ambient() const { return static_cast<int>(monomials.size()); }
    // coordinates of v in the monomial basis; throws std::domain_error if v leaves the piece
    SparseVec ambient_coordinates(const FockVector& v) const;
    FockVector vector(int j) const;
};

// explicit monomial basis; gradings are taken from the first monomial
GradedPiece piece_of(int components, bool relative, std::vector<Monomial> monomials);
// all monomials of energy exactly E; the mode-0 boson count is at most E - Deg_S
GradedPiece absolute_piece(const GradedBackend& b, int energy, int deg_s, int deg_l);
// relative monomials, grouped by (a, b)
std::vector<GradedPiece> relative_pieces(const GradedBackend& b, int energy, int deg_s, int b0max = -1);
// joint kernel of theta(x_0) over the basis of g (loop backends)
GradedPiece relative_projection(const GradedBackend& b, const GradedPiece& p);
// direct sum of pieces sharing (E, Deg_S, Deg_Lambda); ab is dropped. With
// mix_deg_s the parts may differ in Deg_S and the sum keeps the first one's.
GradedPiece direct_sum(const std::vector<const GradedPiece*>& parts, bool mix_deg_s = false);
// the same piece with its monomials reordered by perm (new position i holds old perm[i])
GradedPiece permuted(const GradedPiece& p, const std::vector<int>& perm);

// column j = coordinates of op(basis_j) in the basis of tgt
SparseMatrix assemble_matrix(const FieldOperator& op, const GradedPiece& src, const GradedPiece& tgt);

// Gram matrix of (.,.) on the basis of a relative piece
Matrix gram_matrix(const GradedPiece& p);
// A* = G_src^-1 A^H G_tgt; nullopt if G_src is singular
std::optional<Matrix> gram_adjoint(const Matrix& a, const Matrix& g_src, const Matrix& g_tgt);

struct PieceRow {
    int energy = 0;
    int deg_s = 0;
    std::optional<std::pair<int, int>> ab;
    int deg_l = 0;
    int dim = 0;
    int rank_in = 0;
    int rank_out = 0;
    int coh_dim = 0;
    std::optional<Inertia> gram;
    std::optional<int> harmonic;
    // "", "degenerate", "indefinite", "hodge-mismatch"
    std::string flag;
};

struct CohomologyReport {
    std::string backend;
    bool relative = false;
    std::vector<PieceRow> rows;
    int matrices = 0;
    bool d_squared_zero = true;
    bool oracle_agrees = true;  // only meaningful if the oracle ran
    bool oracle_ran = false;
    bool hodge_consistent = true;
};

struct Ranges {
    int emin = 0;
    int emax = 2;
    int smin = -2;
    int smax = 2;
    bool relative = false;
    bool hodge = false;   // Gram signatures and harmonic dimensions
    bool oracle = false;  // re-rank every assembled matrix with dense_rank
};

// d-cohomology per piece. Absolute rows are (E, Deg_S, Deg_Lambda) pieces of
// the complex over Deg_Lambda. Relative rows come in two kinds: (E, Deg_S, a, b)
// rows for the d1-complex, and aggregate (E, Deg_S, a - b) rows for d.
CohomologyReport cohomology_table(const GradedBackend& b, const FieldOperator& d, const Ranges& r);

// Koszul complex on one creator pair (boson and fermion of one component and mode)
struct KoszulBox {
    int comp = 0;
    int mode = 0;
    int dim = 0;
    int rank = 0;
    int coh_dim = 0;
    bool squares_to_zero = true;
    bool vacuum_class = false;  // vac is closed and not exact
    bool pass() const { return squares_to_zero && coh_dim == 1 && vacuum_class; }
};
std::vector<KoszulBox> koszul_acyclicity(const GradedBackend& b, int max_mode = 2, int max_excitations = 4);

// Lefschetz data per aggregate relative piece
struct LefschetzRow {
    int energy = 0;
    int deg_s = 0;
    int deg_l = 0;
    std::optional<Scalar> hh_eigenvalue;  // HH acts by a scalar on the piece
    // EE and FF on cocycles Z and coboundaries B of the piece
    bool ee_closed = true;  // d EE Z = 0
    bool ff_closed = true;
    bool ee_exact = true;  // EE B inside B
    bool ff_exact = true;
    bool sl2_on_cohomology = true;  // [EE, FF] - HH, [HH, EE] - 2EE, [HH, FF] + 2FF map Z into B
};
std::vector<LefschetzRow> lefschetz_report(const GradedBackend& b, const Ranges& r);

struct KahlerCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};
struct KahlerPiece {
    int energy = 0;
    int deg_l = 0;  // a - b
    int dim = 0;
    Inertia gram;
};
struct KahlerReport {
    std::string backend;
    std::vector<KahlerCheck> checks;
    std::vector<KahlerPiece> pieces;  // B0 = 0 invariant pieces used for the adjoint check
    bool pass() const;
};
// relative box E <= emax, B0 <= b0max (the adjoint check uses B0 = 0)
KahlerReport kahler_report(const GradedBackend& b, int emax, int b0max, int jobs = 1);

}  // namespace sweil::cohomology
