#include "sweil/cohomology.hpp"

#include "sweil/builders.hpp"
#include "sweil/hermitian.hpp"
#include "sweil/kernel.hpp"
#include "sweil/sca.hpp"
#include "sweil/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace sweil::cohomology {

using fock::Family;
using fock::GenKey;

SparseVec GradedPiece::ambient_coordinates(const FockVector& v) const {
    SparseVec out;
    for (const auto& [m, c] : v.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::domain_error("output " + fock::to_text(m) + " is outside the target piece");
        out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

FockVector GradedPiece::vector(int j) const {
    FockVector v;
    for (const auto& [i, c] : basis[j]) v.add(monomials[i], c);
    return v;
}

namespace {

GradedPiece make_piece(int comps, bool relative, int energy, int deg_s, int deg_l,
                       std::optional<std::pair<int, int>> ab, std::vector<Monomial> mons) {
    GradedPiece p;
    p.components = comps;
    p.relative = relative;
    p.energy = energy;
    p.deg_s = deg_s;
    p.deg_l = deg_l;
    p.ab = ab;
    p.monomials = std::move(mons);
    for (int i = 0; i < p.ambient(); ++i) {
        p.index.emplace(p.monomials[i], i);
        p.basis.push_back({{i, Scalar(1)}});
    }
    return p;
}

std::vector<Monomial> at_energy(std::vector<Monomial> all, int energy) {
    std::erase_if(all, [&](const Monomial& m) { return fock::energy(m) != energy; });
    return all;
}

bool is_identity_basis(const GradedPiece& p) {
    if (p.dim() != p.ambient()) return false;
    for (int j = 0; j < p.dim(); ++j)
        if (p.basis[j].size() != 1 || p.basis[j][0].first != j || p.basis[j][0].second != Scalar(1)) return false;
    return true;
}

}  // namespace

GradedPiece piece_of(int components, bool relative, std::vector<Monomial> monomials) {
    fock::Degrees d;
    if (!monomials.empty()) d = fock::energy_and_degrees(monomials.front(), relative);
    std::optional<std::pair<int, int>> ab;
    if (relative) ab = std::pair{d.a, d.b};
    return make_piece(components, relative, d.energy, d.deg_s, relative ? d.a - d.b : d.deg_l, ab, std::move(monomials));
}

GradedPiece absolute_piece(const GradedBackend& b, int energy, int deg_s, int deg_l) {
    std::vector<Monomial> mons;
    if (energy - deg_s >= 0)
        mons = at_energy(fock::enumerate_box(b.dim(), fock::Box{energy, energy - deg_s, false, deg_s, deg_l}), energy);
    return make_piece(b.dim(), false, energy, deg_s, deg_l, std::nullopt, std::move(mons));
}

std::vector<GradedPiece> relative_pieces(const GradedBackend& b, int energy, int deg_s, int b0max) {
    if (energy - deg_s < 0) return {};
    const int cap = b0max < 0 ? energy - deg_s : std::min(b0max, energy - deg_s);
    std::map<std::pair<int, int>, std::vector<Monomial>> groups;
    for (const Monomial& m :
         at_energy(fock::enumerate_box(b.dim(), fock::Box{energy, cap, true, deg_s, std::nullopt}), energy)) {
        const auto d = fock::energy_and_degrees(m, true);
        groups[{d.a, d.b}].push_back(m);
    }
    std::vector<GradedPiece> out;
    for (auto& [ab, mons] : groups)
        out.push_back(make_piece(b.dim(), true, energy, deg_s, ab.first - ab.second, ab, std::move(mons)));
    return out;
}

GradedPiece relative_projection(const GradedBackend& b, const GradedPiece& p) {
    if (!p.relative) throw std::invalid_argument("relative projection of an absolute piece");
    const int n = p.ambient();
    SparseMatrix stacked(b.dim() * n, n);
    for (int j = 0; j < b.dim(); ++j) {
        const FieldOperator th = fieldops::build_theta(b, j, 0);
        for (int c = 0; c < n; ++c)
            for (const auto& [r, v] : p.ambient_coordinates(th.apply(p.monomials[c])))
                stacked.columns[c].emplace_back(j * n + r, v);
    }
    GradedPiece out = p;
    out.basis = exact_rank_kernel(stacked).kernel;
    return out;
}

GradedPiece direct_sum(const std::vector<const GradedPiece*>& parts, bool mix_deg_s) {
    if (parts.empty()) throw std::invalid_argument("direct sum of no pieces");
    GradedPiece out = make_piece(parts[0]->components, parts[0]->relative, parts[0]->energy, parts[0]->deg_s,
                                 parts[0]->deg_l, std::nullopt, {});
    for (const GradedPiece* p : parts) {
        if (p->energy != out.energy || (!mix_deg_s && p->deg_s != out.deg_s) || p->deg_l != out.deg_l)
            throw std::invalid_argument("direct sum of pieces with different gradings");
        const int shift = out.ambient();
        for (const Monomial& m : p->monomials) {
            out.index.emplace(m, out.ambient());
            out.monomials.push_back(m);
        }
        for (SparseVec v : p->basis) {
            for (auto& e : v) e.first += shift;
            out.basis.push_back(std::move(v));
        }
    }
    return out;
}

GradedPiece permuted(const GradedPiece& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.ambient()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> where(perm.size());
    for (int i = 0; i < p.ambient(); ++i) where[perm[i]] = i;
    GradedPiece out = p;
    out.index.clear();
    for (int i = 0; i < p.ambient(); ++i) {
        out.monomials[i] = p.monomials[perm[i]];
        out.index.emplace(out.monomials[i], i);
    }
    for (SparseVec& v : out.basis) {
        for (auto& e : v) e.first = where[e.first];
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return out;
}

SparseMatrix assemble_matrix(const FieldOperator& op, const GradedPiece& src, const GradedPiece& tgt) {
    SparseMatrix m(tgt.dim(), src.dim());
    if (src.dim() == 0) return m;
    std::optional<SubspaceSolver> solver;
    if (!is_identity_basis(tgt)) solver.emplace(tgt.basis);
    for (int j = 0; j < src.dim(); ++j) {
        SparseVec w = tgt.ambient_coordinates(op.apply(src.vector(j)));
        if (solver) {
            auto x = solver->coordinates(std::move(w));
            if (!x) throw std::domain_error(op.name() + " leaves the target subspace");
            w = std::move(*x);
        }
        m.columns[j] = std::move(w);
    }
    return m;
}

Matrix gram_matrix(const GradedPiece& p) {
    if (!p.relative) throw std::invalid_argument("the Hermitian form lives on the relative model");
    const int n = p.ambient();
    std::vector<FockVector> starred;
    starred.reserve(n);
    for (const Monomial& m : p.monomials) {
        const auto d = fock::energy_and_degrees(m, true);
        starred.push_back(algebra::ipow(d.a + d.b) * fieldops::star(m, p.components));
    }
    Matrix amb(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) amb(i, j) = fieldops::curly_form(starred[i], FockVector(p.monomials[j]), p.components);
    if (is_identity_basis(p)) return amb;
    const Matrix bm = to_dense([&] {
        SparseMatrix s(n, p.dim());
        s.columns = p.basis;
        return s;
    }());
    return conj_transpose(bm) * amb * bm;
}

std::optional<Matrix> gram_adjoint(const Matrix& a, const Matrix& g_src, const Matrix& g_tgt) {
    auto inv = inverse(g_src);
    if (!inv) return std::nullopt;
    return *inv * conj_transpose(a) * g_tgt;
}

// ---- cohomology tables ----

namespace {

struct ChainPiece {
    const GradedPiece* piece = nullptr;  // null: zero space
    int degree = 0;
    int dim() const { return piece ? piece->dim() : 0; }
};

struct ChainResult {
    std::vector<SparseMatrix> diff;  // diff[k]: chain[k] -> chain[k+1]
    std::vector<int> rank;
};

ChainResult run_chain(const FieldOperator& d, const std::vector<ChainPiece>& chain, CohomologyReport& rep, bool oracle) {
    ChainResult out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const ChainPiece& s = chain[k];
        const ChainPiece& t = chain[k + 1];
        SparseMatrix m(t.dim(), s.dim());
        if (s.piece && t.piece) m = assemble_matrix(d, *s.piece, *t.piece);
        else if (s.piece && s.dim() > 0) {
            // the image must vanish when there is no target piece
            for (int j = 0; j < s.dim(); ++j)
                if (!d.apply(s.piece->vector(j)).is_zero())
                    throw std::domain_error(d.name() + " has an image outside the graded range");
        }
        out.rank.push_back(exact_rank(m));
        ++rep.matrices;
        if (oracle) {
            rep.oracle_ran = true;
            if (dense_rank(to_dense(m)) != out.rank.back()) rep.oracle_agrees = false;
        }
        out.diff.push_back(std::move(m));
    }
    for (std::size_t k = 0; k + 2 < chain.size(); ++k)
        if (!multiply(out.diff[k + 1], out.diff[k]).is_zero()) rep.d_squared_zero = false;
    return out;
}

// harmonic dimension of the k-th piece, or the reason it is not defined
void hodge(const std::vector<ChainPiece>& chain, const ChainResult& cr, std::size_t k, std::vector<std::optional<Matrix>>& grams,
           PieceRow& row, CohomologyReport& rep) {
    auto gram = [&](std::size_t i) -> const std::optional<Matrix>& {
        if (!grams[i] && chain[i].piece) grams[i] = gram_matrix(*chain[i].piece);
        return grams[i];
    };
    const int n = chain[k].dim();
    if (n == 0) {
        row.gram = Inertia{};
        row.harmonic = 0;
        return;
    }
    const Matrix& g = *gram(k);
    try {
        row.gram = hermitian_inertia(g);
    } catch (const std::invalid_argument&) {
        row.flag = "non-hermitian";
        return;
    }
    Matrix lap(n, n);
    bool ok = true;
    if (k > 0 && !cr.diff[k - 1].is_zero()) {
        const Matrix dm = to_dense(cr.diff[k - 1]);
        const auto adj = gram_adjoint(dm, *gram(k - 1), g);
        if (adj) lap = lap + dm * *adj;
        else ok = false;
    }
    if (k + 1 < chain.size() && !cr.diff[k].is_zero()) {
        const Matrix dm = to_dense(cr.diff[k]);
        const auto adj = gram_adjoint(dm, g, *gram(k + 1));
        if (adj) lap = lap + *adj * dm;
        else ok = false;
    }
    if (!ok) {
        row.flag = "degenerate";
        return;
    }
    row.harmonic = n - dense_rank(lap);
    if (!row.gram->definite()) {
        row.flag = row.gram->degenerate() ? "degenerate" : "indefinite";
        return;
    }
    if (*row.harmonic != row.coh_dim) {
        row.flag = "hodge-mismatch";
        rep.hodge_consistent = false;
    }
}

void emit_rows(const std::vector<ChainPiece>& chain, const ChainResult& cr, int energy, int deg_s, bool with_hodge,
               CohomologyReport& rep, const std::function<void(PieceRow&, const ChainPiece&)>& label) {
    std::vector<std::optional<Matrix>> grams(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (!chain[k].piece) continue;
        PieceRow row;
        row.energy = energy;
        row.deg_s = deg_s;
        row.deg_l = chain[k].degree;
        row.dim = chain[k].dim();
        row.rank_in = k > 0 ? cr.rank[k - 1] : 0;
        row.rank_out = k + 1 < chain.size() ? cr.rank[k] : 0;
        row.coh_dim = row.dim - row.rank_in - row.rank_out;
        label(row, chain[k]);
        if (with_hodge) hodge(chain, cr, k, grams, row, rep);
        rep.rows.push_back(std::move(row));
    }
}

// consecutive degrees lo..hi, gaps as zero spaces
template <class Lookup>
std::vector<ChainPiece> make_chain(int lo, int hi, Lookup&& find) {
    std::vector<ChainPiece> chain;
    for (int k = lo; k <= hi; ++k) chain.push_back({find(k), k});
    return chain;
}

}  // namespace

CohomologyReport cohomology_table(const GradedBackend& b, const FieldOperator& d, const Ranges& r) {
    CohomologyReport rep;
    rep.backend = b.label;
    rep.relative = r.relative;
    for (int e = r.emin; e <= r.emax; ++e)
        for (int s = r.smin; s <= std::min(r.smax, e); ++s) {
            if (!r.relative) {
                std::map<int, GradedPiece> byl;
                for (const Monomial& m : at_energy(fock::enumerate_box(b.dim(), fock::Box{e, e - s, false, s, std::nullopt}), e))
                    byl[fock::energy_and_degrees(m).deg_l];
                if (byl.empty()) continue;
                for (auto& [l, p] : byl) p = absolute_piece(b, e, s, l);
                const int lo = byl.begin()->first, hi = byl.rbegin()->first;
                const auto chain = make_chain(lo, hi, [&](int k) -> const GradedPiece* {
                    auto it = byl.find(k);
                    return it == byl.end() ? nullptr : &it->second;
                });
                const auto cr = run_chain(d, chain, rep, r.oracle);
                emit_rows(chain, cr, e, s, false, rep, [](PieceRow&, const ChainPiece&) {});
                continue;
            }
            std::vector<GradedPiece> pieces = relative_pieces(b, e, s);
            if (pieces.empty()) continue;
            for (GradedPiece& p : pieces) p = relative_projection(b, p);
            std::map<std::pair<int, int>, const GradedPiece*> byab;
            std::map<int, std::vector<const GradedPiece*>> byk;
            for (const GradedPiece& p : pieces) {
                byab[*p.ab] = &p;
                byk[p.deg_l].push_back(&p);
            }

            // bigraded rows: d1 along a at fixed b
            const FieldOperator d1 = fieldops::split_d1_d2(d).first;
            std::map<int, std::pair<int, int>> arange;  // b -> a range
            for (const auto& [ab, p] : byab) {
                auto [it, fresh] = arange.try_emplace(ab.second, ab.first, ab.first);
                if (!fresh) it->second = {std::min(it->second.first, ab.first), std::max(it->second.second, ab.first)};
            }
            for (const auto& [bb, range] : arange) {
                const auto chain = make_chain(range.first, range.second, [&](int a) -> const GradedPiece* {
                    auto it = byab.find({a, bb});
                    return it == byab.end() ? nullptr : it->second;
                });
                const auto cr = run_chain(d1, chain, rep, r.oracle);
                emit_rows(chain, cr, e, s, r.hodge, rep, [](PieceRow& row, const ChainPiece& c) {
                    row.ab = c.piece->ab;
                    row.deg_l = c.piece->deg_l;
                });
            }

            // aggregate rows: d along a - b
            std::map<int, GradedPiece> sums;
            for (const auto& [k, parts] : byk) sums.emplace(k, direct_sum(parts));
            const auto chain = make_chain(sums.begin()->first, sums.rbegin()->first, [&](int k) -> const GradedPiece* {
                auto it = sums.find(k);
                return it == sums.end() ? nullptr : &it->second;
            });
            const auto cr = run_chain(d, chain, rep, r.oracle);
            emit_rows(chain, cr, e, s, r.hodge, rep, [](PieceRow&, const ChainPiece&) {});
        }
    return rep;
}

// ---- Koszul acyclicity ----

std::vector<KoszulBox> koszul_acyclicity(const GradedBackend& b, int max_mode, int max_excitations) {
    const FieldOperator h = fieldops::build_koszul_h(b);
    std::vector<KoszulBox> out;
    for (int j = 0; j < b.dim(); ++j)
        for (int m = -max_mode; m <= max_mode; ++m) {
            const GenKey boson{m <= 0 ? Family::beta : Family::gamma, j, m};
            const GenKey fermion{m <= 0 ? Family::tau : Family::eps, j, m};
            std::vector<Monomial> states;
            for (int f = 0; f <= 1; ++f)
                for (int k = 0; k + f <= max_excitations; ++k) {
                    std::vector<GenKey> keys(static_cast<std::size_t>(k), boson);
                    if (f) keys.push_back(fermion);
                    states.push_back(fock::monomial_of(keys));
                }
            const GradedPiece p = make_piece(b.dim(), false, 0, 0, 0, std::nullopt, states);
            const SparseMatrix hm = assemble_matrix(h, p, p);
            KoszulBox box;
            box.comp = j;
            box.mode = m;
            box.dim = p.dim();
            box.rank = exact_rank(hm);
            box.squares_to_zero = multiply(hm, hm).is_zero();
            box.coh_dim = box.dim - 2 * box.rank;
            const int vac = p.index.at(fock::vacuum());
            SparseMatrix with_vac = hm;
            with_vac.columns.push_back({{vac, Scalar(1)}});
            ++with_vac.cols;
            box.vacuum_class = hm.columns[vac].empty() && exact_rank(with_vac) == box.rank + 1;
            out.push_back(box);
        }
    return out;
}

// ---- Lefschetz ----

namespace {

SparseMatrix columns_of(const std::vector<SparseVec>& cols, int rows) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    m.columns = cols;
    return m;
}

SparseMatrix hcat(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m = a;
    m.columns.insert(m.columns.end(), b.columns.begin(), b.columns.end());
    m.cols += b.cols;
    return m;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Scalar& c = Scalar(1)) {
    SparseMatrix m = a;
    for (int j = 0; j < m.cols; ++j) axpy(m.columns[j], c, b.columns[j]);
    return m;
}

bool in_span(const SparseMatrix& span, const SparseMatrix& cols) {
    if (cols.cols == 0 || cols.is_zero()) return true;
    return exact_rank(hcat(span, cols)) == exact_rank(span);
}

}  // namespace

std::vector<LefschetzRow> lefschetz_report(const GradedBackend& b, const Ranges& r) {
    const FieldOperator d = fieldops::build_differential_d(b).d;
    const FieldOperator ee = fieldops::build_sl2_EHF(b, Der::E);
    const FieldOperator hh = fieldops::build_sl2_EHF(b, Der::H);
    const FieldOperator ff = fieldops::build_sl2_EHF(b, Der::F);
    std::vector<LefschetzRow> out;
    for (int e = r.emin; e <= r.emax; ++e)
        for (int s = r.smin; s <= std::min(r.smax, e); ++s) {
            std::vector<GradedPiece> pieces = relative_pieces(b, e, s);
            if (pieces.empty()) continue;
            std::map<int, std::vector<const GradedPiece*>> byk;
            for (GradedPiece& p : pieces) p = relative_projection(b, p);
            for (const GradedPiece& p : pieces) byk[p.deg_l].push_back(&p);
            std::map<int, GradedPiece> v;
            for (const auto& [k, parts] : byk) v.emplace(k, direct_sum(parts));
            const GradedPiece empty;
            auto piece = [&](int k) -> const GradedPiece& {
                auto it = v.find(k);
                return it == v.end() ? empty : it->second;
            };
            auto mat = [&](const FieldOperator& op, int k, int shift) {
                const GradedPiece& src = piece(k);
                const GradedPiece& tgt = piece(k + shift);
                if (tgt.dim() == 0 && src.dim() > 0) {
                    for (int j = 0; j < src.dim(); ++j)
                        if (!op.apply(src.vector(j)).is_zero())
                            throw std::domain_error(op.name() + " has an image outside the graded range");
                    return SparseMatrix(0, src.dim());
                }
                return assemble_matrix(op, src, tgt);
            };
            for (const auto& [k, vk] : v) {
                LefschetzRow row;
                row.energy = e;
                row.deg_s = s;
                row.deg_l = k;
                const SparseMatrix dk = mat(d, k, 1);
                const SparseMatrix z = columns_of(exact_rank_kernel(dk).kernel, vk.dim());
                const SparseMatrix bin = mat(d, k - 1, 1);  // image in V_k
                const SparseMatrix ek = mat(ee, k, 2), fk = mat(ff, k, -2), hk = mat(hh, k, 0);

                // HH acting by a scalar
                if (vk.dim() > 0) {
                    const Scalar c = entry(hk.columns[0], 0);
                    bool scalar = true;
                    for (int j = 0; j < vk.dim() && scalar; ++j)
                        scalar = hk.columns[j] == SparseVec{{j, c}} || (c.is_zero() && hk.columns[j].empty());
                    if (scalar) row.hh_eigenvalue = c;
                }

                row.ee_closed = multiply(mat(d, k + 2, 1), multiply(ek, z)).is_zero();
                row.ff_closed = multiply(mat(d, k - 2, 1), multiply(fk, z)).is_zero();
                row.ee_exact = in_span(mat(d, k + 1, 1), multiply(ek, bin));
                row.ff_exact = in_span(mat(d, k - 3, 1), multiply(fk, bin));

                // commutators restricted to Z_k, compared modulo exact classes
                const SparseMatrix ef = add(multiply(mat(ee, k - 2, 2), fk), multiply(mat(ff, k + 2, -2), ek), Scalar(-1));
                const SparseMatrix c1 = multiply(add(ef, hk, Scalar(-1)), z);
                const SparseMatrix he = add(multiply(mat(hh, k + 2, 0), ek), multiply(ek, hk), Scalar(-1));
                const SparseMatrix c2 = multiply(add(he, ek, Scalar(-2)), z);
                const SparseMatrix hf = add(multiply(mat(hh, k - 2, 0), fk), multiply(fk, hk), Scalar(-1));
                const SparseMatrix c3 = multiply(add(hf, fk, Scalar(2)), z);
                row.sl2_on_cohomology = in_span(bin, c1) && in_span(mat(d, k + 1, 1), c2) && in_span(mat(d, k - 3, 1), c3);
                out.push_back(std::move(row));
            }
        }
    return out;
}

// ---- Kahler package ----

bool KahlerReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const KahlerCheck& c) { return c.pass; });
}

namespace {

FieldOperator psi_operator(const GradedBackend& b, sca::KSym s, const Scalar& central) {
    const sca::SCAElement e = sca::psi(s, true);
    std::vector<std::pair<Scalar, FieldOperator>> parts;
    for (const auto& [g, c] : e.terms()) parts.emplace_back(c, fieldops::build_s2alpha_family(b, Scalar(0), g.sym, g.n));
    const FieldOperator op = FieldOperator::combine("psi(" + std::string(sca::ksym_name(s)) + ")", parts,
                                                    parts.front().second.grading());
    return op.with_constant(op.constant() + e.central_part() * central);
}

int bidegree_of(const Monomial& m) {
    const auto d = fock::energy_and_degrees(m, true);
    return d.a * 1000 + d.b;
}

}  // namespace

KahlerReport kahler_report(const GradedBackend& b, int emax, int b0max, int jobs) {
    if (b.kind != algebra::BackendKind::loop) throw std::invalid_argument("the Kahler package needs a loop backend");
    KahlerReport rep;
    rep.backend = b.label;
    const int dim = b.dim();
    const auto box = fock::enumerate_box(dim, fock::Box{emax, b0max, true, std::nullopt, std::nullopt});

    // invariant pieces (E, Deg_S, a, b, B0) of the box; theta(x_0) keeps all five
    std::map<std::tuple<int, int, int, int, int>, std::vector<Monomial>> groups;
    for (const Monomial& m : box) {
        const auto d = fock::energy_and_degrees(m, true);
        groups[{d.energy, d.deg_s, d.a, d.b, fock::zero_boson_count(m)}].push_back(m);
    }
    std::vector<GradedPiece> inv;
    for (auto& [key, mons] : groups) {
        const auto [e, s, a, bb, b0] = key;
        inv.push_back(relative_projection(b, make_piece(dim, true, e, s, a - bb, std::pair{a, bb}, std::move(mons))));
    }

    {
        const auto diff = fieldops::build_differential_d(b);
        const auto [d1, d2] = fieldops::split_d1_d2(diff.d);
        KahlerCheck c{"d = d1 + d2", true, ""};
        std::size_t vectors = 0;
        for (const GradedPiece& p : inv)
            for (int j = 0; j < p.dim() && c.pass; ++j) {
                ++vectors;
                const FockVector v = p.vector(j);
                const FockVector x1 = d1.apply(v), x2 = d2.apply(v);
                const auto [a, bb] = *p.ab;
                bool ok = diff.d.apply(v) == x1 + x2;
                for (const auto& [m, cm] : x1.terms()) ok = ok && bidegree_of(m) == (a + 1) * 1000 + bb;
                for (const auto& [m, cm] : x2.terms()) ok = ok && bidegree_of(m) == a * 1000 + bb - 1;
                if (!ok) {
                    c.pass = false;
                    c.detail = "fails on an invariant vector of " + fock::to_text(v);
                }
            }
        if (c.pass) c.detail = std::to_string(vectors) + " invariant vectors";
        rep.checks.push_back(c);
    }
    {
        KahlerCheck c{"star^2 = id", true, ""};
        for (const Monomial& m : box)
            if (!(fieldops::star(fieldops::star(m, dim), dim) == FockVector(m))) {
                c.pass = false;
                c.detail = "fails on " + fock::to_text(m);
                break;
            }
        if (c.pass) c.detail = std::to_string(box.size()) + " monomials";
        rep.checks.push_back(c);
    }
    {
        const Monomial vr = fock::relative_vacuum(dim);
        const Scalar v = fieldops::curly_form(vr, vr, dim);
        rep.checks.push_back({"{vac_rel, vac_rel} = 1", v == Scalar(1), v.str()});
    }
    {
        // Gram adjoint of theta(h_0) against -theta(p_0) on B0 = 0 invariant pieces (E, a - b)
        const FieldOperator h0 = fieldops::build_s2alpha_family(b, Scalar(0), Sym::h, 0);
        const FieldOperator p0 = fieldops::build_s2alpha_family(b, Scalar(0), Sym::p, 0);
        std::map<std::pair<int, int>, std::vector<const GradedPiece*>> byk;
        for (const GradedPiece& p : inv)
            if (fock::zero_boson_count(p.monomials.front()) == 0) byk[{p.energy, p.deg_l}].push_back(&p);
        std::map<std::pair<int, int>, GradedPiece> pieces;
        std::map<std::pair<int, int>, Matrix> grams;
        for (const auto& [key, parts] : byk) pieces.emplace(key, direct_sum(parts, true));
        for (const auto& [key, p] : pieces) {
            grams.emplace(key, gram_matrix(p));
            rep.pieces.push_back({key.first, key.second, p.dim(), hermitian_inertia(grams.at(key))});
        }
        KahlerCheck c{"adjoint of theta(h_0) = -theta(p_0)", true, ""};
        int compared = 0, degenerate = 0;
        for (const auto& [key, src] : pieces) {
            auto tk = std::pair{key.first, key.second - 1};
            auto it = pieces.find(tk);
            if (it == pieces.end() || src.dim() == 0) continue;
            const GradedPiece& tgt = it->second;
            const Matrix a = to_dense(assemble_matrix(h0, src, tgt));
            const auto adj = gram_adjoint(a, grams.at(key), grams.at(tk));
            if (!adj) {
                ++degenerate;
                continue;
            }
            const Matrix p = to_dense(assemble_matrix(p0, tgt, src));
            ++compared;
            if (!(*adj + p).is_zero() && c.pass) {
                c.pass = false;
                c.detail = "differs on the piece E=" + std::to_string(key.first) + ", a-b=" + std::to_string(tk.second) +
                           " -> " + std::to_string(key.second);
            }
        }
        if (compared == 0) c.pass = false;
        if (c.pass) c.detail = std::to_string(compared) + " piece maps";
        if (degenerate) c.detail += ", " + std::to_string(degenerate) + " degenerate";
        rep.checks.push_back(c);
    }

    const auto states = box;
    {
        const Scalar central = verify::claimed_central_charge(b);
        std::vector<FieldOperator> ops;
        for (sca::KSym s : sca::kAllKSyms) ops.push_back(psi_operator(b, s, central));
        std::vector<verify::Identity> ids;
        const int n = static_cast<int>(std::size(sca::kAllKSyms));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                verify::Identity id{"[" + std::string(sca::ksym_name(sca::kAllKSyms[i])) + ", " +
                                        std::string(sca::ksym_name(sca::kAllKSyms[j])) + "]",
                                    {verify::comm(i, j)}};
                for (const auto& [z, c] : sca::kahler_bracket(sca::kAllKSyms[i], sca::kAllKSyms[j]))
                    if (!c.is_zero()) id.words.push_back(verify::op(static_cast<int>(z), c, true));
                ids.push_back(std::move(id));
            }
        const auto first = verify::check_identities(ops, ids, states, jobs);
        KahlerCheck c{"psi images satisfy the Kahler relations", true,
                      std::to_string(ids.size()) + " relations on " + std::to_string(states.size()) + " states"};
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (first[i] != verify::kNoFailure) {
                c.pass = false;
                c.detail = ids[i].label + " fails on " + fock::to_text(states[first[i]]);
                break;
            }
        rep.checks.push_back(c);
    }
    {
        std::vector<FieldOperator> ops{fieldops::build_sl2_EHF(b, Der::E), fieldops::build_sl2_EHF(b, Der::H),
                                       fieldops::build_sl2_EHF(b, Der::F)};
        std::vector<verify::Identity> ids{
            {"[EE, FF] = HH", {verify::comm(0, 2), verify::op(1, Scalar(1), true)}},
            {"[HH, EE] = 2 EE", {verify::comm(1, 0), verify::op(0, Scalar(2), true)}},
            {"[HH, FF] = -2 FF", {verify::comm(1, 2), verify::op(2, Scalar(-2), true)}},
        };
        const auto first = verify::check_identities(ops, ids, states, jobs);
        KahlerCheck c{"exterior sl(2)", true, std::to_string(states.size()) + " states"};
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (first[i] != verify::kNoFailure) {
                c.pass = false;
                c.detail = ids[i].label + " fails on " + fock::to_text(states[first[i]]);
                break;
            }
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace sweil::cohomology
