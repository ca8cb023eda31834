#include "sweil/builders.hpp"

#include <string>

namespace sweil::fieldops {

using algebra::BackendKind;
using algebra::backend_bracket;
using algebra::unsupported_operation;

namespace {

constexpr Family G = Family::gamma;
constexpr Family B = Family::beta;
constexpr Family EPS = Family::eps;
constexpr Family TAU = Family::tau;

Slot slot(Family f, int ci, int a1, int b = 0, int a2 = 0) { return {f, ci, a1, a2, b}; }

std::vector<CompTuple> diagonal(int dim) {
    std::vector<CompTuple> out;
    for (int u = 0; u < dim; ++u) out.push_back({{u, u, u}, Scalar(1)});
    return out;
}

TermShape term(std::vector<Slot> slots, std::vector<CompTuple> tuples, ModeCoef coef = {}, bool no = true,
               int nvars = 1) {
    TermShape t;
    t.slots = std::move(slots);
    t.tuples = std::move(tuples);
    t.coef = std::move(coef);
    t.normal_ordered = no;
    t.nvars = nvars;
    return t;
}

std::string indexed(std::string_view base, int n) { return std::string(base) + "_" + std::to_string(n); }

// sum over components of the fmu-type operators on one component
struct WittData {
    Scalar lambda, mu;
    int dim;
};

WittData witt_data(const GradedBackend& b) {
    if (b.kind == BackendKind::fmu) return {b.lambda, b.mu, 1};
    if (b.kind == BackendKind::witt) throw unsupported_operation("N=2 family needs an fmu, loop or loop_module backend");
    return {Scalar(0), Scalar(0), b.dim()};
}

// sum_m (-m + mu - n lambda + lambda)(:tau_{m+n} eps_m: + :beta_{m+n} gamma_m:)
FieldOperator witt_rep(const WittData& w, int n, std::string name) {
    const Scalar l = w.lambda, mu = w.mu;
    ModeCoef c = [l, mu, n](int m, int) { return Scalar(-m) + mu - Scalar(n - 1) * l; };
    std::vector<TermShape> t{term({slot(TAU, 0, 1, n), slot(EPS, 0, 1)}, diagonal(w.dim), c),
                             term({slot(B, 0, 1, n), slot(G, 0, 1)}, diagonal(w.dim), c)};
    return FieldOperator(std::move(name), {0, -n, 0, 0}, std::move(t));
}

// lambda sum :tau_m eps_{m+n}: + (lambda - 1) sum :beta_m gamma_{m+n}: + mu D delta_{n,0}
FieldOperator n2_H(const WittData& w, int n) {
    auto scaled = [&](const Scalar& f) {
        auto d = diagonal(w.dim);
        for (auto& c : d) c.factor = f;
        return d;
    };
    std::vector<TermShape> t;
    if (!w.lambda.is_zero()) t.push_back(term({slot(TAU, 0, 1), slot(EPS, 0, 1, n)}, scaled(w.lambda)));
    const Scalar l1 = w.lambda - Scalar(1);
    if (!l1.is_zero()) t.push_back(term({slot(B, 0, 1), slot(G, 0, 1, n)}, scaled(l1)));
    Scalar constant = n == 0 ? w.mu * Scalar(w.dim) : Scalar(0);
    return FieldOperator(indexed("H", n), {0, n, 0, 0}, std::move(t), constant);
}

// sum gamma_{m+n} tau_m
FieldOperator frak_h(int dim, int n) {
    return FieldOperator(indexed("h", n), {1, n, 1, -1},
                         {term({slot(G, 0, 1, n), slot(TAU, 0, 1)}, diagonal(dim), {}, false)});
}

// sum (m - mu - (n+1) lambda) beta_{m-n} eps_m
FieldOperator frak_p(const WittData& w, int n) {
    const Scalar l = w.lambda, mu = w.mu;
    ModeCoef c = [l, mu, n](int m, int) { return Scalar(m) - mu - Scalar(n + 1) * l; };
    return FieldOperator(indexed("p", n), {1, n, -1, 1},
                         {term({slot(B, 0, 1, -n), slot(EPS, 0, 1)}, diagonal(w.dim), c, false)});
}

void require_lie(const GradedBackend& b, const char* what) {
    if (!b.is_lie()) throw unsupported_operation(std::string(what) + " needs a loop or witt backend");
}

void require_loop(const GradedBackend& b, const char* what) {
    if (b.kind != BackendKind::loop) throw unsupported_operation(std::string(what) + " needs a loop backend");
}

}  // namespace

FieldOperator build_theta(const GradedBackend& b, int j, int n) {
    const int dim = b.dim();
    std::vector<TermShape> terms;
    if (b.kind == BackendKind::loop || b.kind == BackendKind::loop_module) {
        std::vector<CompTuple> tuples;
        for (int v = 0; v < dim; ++v)
            for (const auto& [w, c] : backend_bracket(b, j, n, v, 0)) tuples.push_back({{v, w, 0}, c});
        if (!tuples.empty()) {
            terms.push_back(term({slot(TAU, 1, 1, n), slot(EPS, 0, 1)}, tuples));
            terms.push_back(term({slot(B, 1, 1, n), slot(G, 0, 1)}, tuples));
        }
    } else {
        ModeCoef c = [b, j, n](int m, int) {
            auto v = backend_bracket(b, j, n, 0, m);
            return v.empty() ? Scalar(0) : v.front().second;
        };
        terms.push_back(term({slot(TAU, 0, 1, n), slot(EPS, 0, 1)}, diagonal(1), c));
        terms.push_back(term({slot(B, 0, 1, n), slot(G, 0, 1)}, diagonal(1), c));
    }
    return FieldOperator("theta(" + std::to_string(j + 1) + "," + std::to_string(n) + ")", {0, -n, 0, 0},
                         std::move(terms));
}

FieldOperator build_theta_adjoint(const GradedBackend& b, int j, int n) {
    require_lie(b, "adjoint theta");
    return build_theta(b, j, n);
}

FieldOperator build_witt_rep(const GradedBackend& b, int n) {
    if (b.kind != BackendKind::fmu) throw unsupported_operation("Witt representation needs an fmu backend");
    return witt_rep(witt_data(b), n, indexed("thetaL", n));
}

FieldOperator build_tau(const GradedBackend& b, int j, int n) {
    if (j < 0 || j >= b.dim()) throw std::out_of_range("component out of range");
    return FieldOperator("tau(" + std::to_string(j + 1) + "," + std::to_string(n) + ")", {1, -n, 0, -1},
                         {term({slot(TAU, 0, 0, n)}, {{{j, j, j}, Scalar(1)}}, {}, false, 0)});
}

FieldOperator build_n2_family(const GradedBackend& b, Sym s, int n) {
    const WittData w = witt_data(b);
    switch (s) {
    case Sym::L: {
        // -theta(L_{-n}) + (n+1)/2 theta(H_n)
        FieldOperator l = witt_rep(w, -n, "thetaL");
        FieldOperator h = n2_H(w, n);
        return FieldOperator::combine(indexed("L", n), {{Scalar(-1), l}, {Scalar::frac(n + 1, 2), h}}, {0, n, 0, 0});
    }
    case Sym::H: return n2_H(w, n);
    case Sym::h: return frak_h(w.dim, n);
    case Sym::p: return frak_p(w, n);
    default: throw std::invalid_argument("not an N=2 symbol: " + std::string(sym_name(s)));
    }
}

FieldOperator build_s2alpha_family(const GradedBackend& b, const Scalar& alpha, Sym s, int n) {
    require_loop(b, "S'(2,alpha) representation");
    if (!alpha.is_real()) throw std::invalid_argument("alpha must be rational");
    const int dim = b.dim();
    const Scalar ah = alpha * Scalar::frac(1, 2);
    const Scalar mi = -Scalar::i();
    switch (s) {
    case Sym::L: {
        FieldOperator l = witt_rep({Scalar(0), ah, dim}, -n, "thetaL");
        FieldOperator h = n2_H({Scalar(0), Scalar(0), dim}, n);
        Scalar constant;
        if (n == 0) constant = (alpha * Scalar::frac(1, 4) - alpha * alpha * Scalar::frac(1, 8)) * Scalar(dim);
        return FieldOperator::combine(indexed("Lalpha", n),
                                      {{Scalar(-1), l}, {(Scalar(n + 1) - alpha) * Scalar::frac(1, 2), h}}, {0, n, 0, 0})
            .with_constant(constant);
    }
    case Sym::H: return n2_H({Scalar(0), Scalar(0), dim}, n);
    case Sym::h: return frak_h(dim, n);
    case Sym::p: return frak_p({Scalar(0), ah, dim}, n);
    case Sym::E: {
        // -(i/2) sum gamma_m gamma_{1-m+n}
        auto t = diagonal(dim);
        for (auto& c : t) c.factor = mi * Scalar::frac(1, 2);
        return FieldOperator(indexed("E", n), {0, n + 1, 2, 0}, {term({slot(G, 0, 1), slot(G, 0, -1, 1 + n)}, t, {}, false)});
    }
    case Sym::F: {
        // -(i/2) sum beta_m beta_{1-m-n}
        auto t = diagonal(dim);
        for (auto& c : t) c.factor = mi * Scalar::frac(1, 2);
        return FieldOperator(indexed("F", n), {0, n - 1, -2, 0},
                             {term({slot(B, 0, 1), slot(B, 0, -1, 1 - n)}, t, {}, false)});
    }
    case Sym::y: {
        // i sum beta_m tau_{1-m-n}
        auto t = diagonal(dim);
        for (auto& c : t) c.factor = Scalar::i();
        return FieldOperator(indexed("y", n), {1, n - 1, -1, -1},
                             {term({slot(B, 0, 1), slot(TAU, 0, -1, 1 - n)}, t, {}, false)});
    }
    case Sym::x: {
        // -i sum (m - alpha/2) gamma_{1-m+n} eps_m
        auto t = diagonal(dim);
        for (auto& c : t) c.factor = mi;
        ModeCoef c = [ah](int m, int) { return Scalar(m) - ah; };
        return FieldOperator(indexed("x", n), {1, n + 1, 1, 1},
                             {term({slot(G, 0, -1, 1 + n), slot(EPS, 0, 1)}, t, c, false)});
    }
    }
    throw std::invalid_argument("unknown symbol");
}

FieldOperator build_s2alpha_HH(const GradedBackend& b) {
    require_loop(b, "HH");
    auto t = diagonal(b.dim());
    for (auto& c : t) c.factor = Scalar(-1);
    return FieldOperator("HH", {0, 0, 0, 0}, {term({slot(TAU, 0, 1), slot(EPS, 0, 1)}, t)});
}

Differential build_differential_d(const GradedBackend& b) {
    require_lie(b, "differential d");
    const int dim = b.dim();
    std::vector<TermShape> cubic, mixed;
    // slots: tau(w_{i+j}) eps(v_j) eps(u_i) with comp tuple (u, v, w), i = m1, j = m2
    std::vector<Slot> sc{slot(TAU, 2, 1, 0, 1), slot(EPS, 1, 0, 0, 1), slot(EPS, 0, 1)};
    std::vector<Slot> sm{slot(B, 2, 1, 0, 1), slot(G, 1, 0, 0, 1), slot(EPS, 0, 1)};
    if (b.kind == BackendKind::loop) {
        std::vector<CompTuple> half, full;
        for (int u = 0; u < dim; ++u)
            for (int v = 0; v < dim; ++v)
                for (const auto& [w, c] : backend_bracket(b, u, 0, v, 0)) {
                    half.push_back({{u, v, w}, c * Scalar::frac(1, 2)});
                    full.push_back({{u, v, w}, c});
                }
        if (!full.empty()) {
            cubic.push_back(term(sc, half, {}, true, 2));
            mixed.push_back(term(sm, full, {}, true, 2));
        }
    } else {
        ModeCoef c = [](int i, int j) { return Scalar(i - j); };
        cubic.push_back(term(sc, {{{0, 0, 0}, Scalar::frac(1, 2)}}, c, true, 2));
        mixed.push_back(term(sm, {{{0, 0, 0}, Scalar(1)}}, c, true, 2));
    }
    const Grading g{1, 0, 0, 1};
    std::vector<TermShape> all = cubic;
    all.insert(all.end(), mixed.begin(), mixed.end());
    return {FieldOperator("d", g, std::move(all)), FieldOperator("d_cubic", g, std::move(cubic)),
            FieldOperator("d_mixed", g, std::move(mixed))};
}

FieldOperator build_koszul_h(const GradedBackend& b) {
    return FieldOperator("koszul", {1, 0, 1, -1}, {term({slot(G, 0, 1), slot(TAU, 0, 1)}, diagonal(b.dim()), {}, false)});
}

FieldOperator build_sl2_EHF(const GradedBackend& b, Der s) {
    require_loop(b, "exterior sl(2)");
    if (!b.has_identity_form()) throw unsupported_operation("exterior sl(2) needs an orthonormal invariant form");
    const int dim = b.dim();
    auto t = diagonal(dim);
    switch (s) {
    case Der::E: {
        // i sum_{m>0} m eps_{-m} eps_m
        for (auto& c : t) c.factor = Scalar::i();
        ModeCoef c = [](int m, int) { return m > 0 ? Scalar(m) : Scalar(0); };
        return FieldOperator("EE", {0, 0, 0, 2}, {term({slot(EPS, 0, -1), slot(EPS, 0, 1)}, t, c, false)});
    }
    case Der::H: {
        // -sum_{m != 0} :tau_m eps_m:
        for (auto& c : t) c.factor = Scalar(-1);
        ModeCoef c = [](int m, int) { return m != 0 ? Scalar(1) : Scalar(0); };
        return FieldOperator("HH", {0, 0, 0, 0}, {term({slot(TAU, 0, 1), slot(EPS, 0, 1)}, t, c)});
    }
    case Der::F: {
        // -i sum_{m>0} (1/m) tau_m tau_{-m}
        for (auto& c : t) c.factor = -Scalar::i();
        ModeCoef c = [](int m, int) { return m > 0 ? Scalar::frac(1, m) : Scalar(0); };
        return FieldOperator("FF", {0, 0, 0, -2}, {term({slot(TAU, 0, 1), slot(TAU, 0, -1)}, t, c, false)});
    }
    }
    throw std::invalid_argument("unknown derivation");
}

std::pair<int, int> relative_bidegree_shift(const PackedKey* keys, int n, int ncreators) {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        const Family f = fock::family_of(keys[i]);
        const int m = fock::mode_of(keys[i]);
        const bool cre = i < ncreators;
        if (f == EPS) {
            if (cre) ++da;
            else if (m < 0) --db;
        } else if (f == TAU) {
            if (!cre) --da;
            else if (m < 0) ++db;
        }
    }
    return {da, db};
}

std::pair<FieldOperator, FieldOperator> split_d1_d2(const FieldOperator& d) {
    auto with = [](int a, int b) {
        return [a, b](const PackedKey* k, int n, int c) { return relative_bidegree_shift(k, n, c) == std::make_pair(a, b); };
    };
    return {d.filtered("d1", with(1, 0)), d.filtered("d2", with(0, -1))};
}

FieldOperator build_dc(const FieldOperator& d) {
    auto [d1, d2] = split_d1_d2(d);
    return FieldOperator::combine("dc", {{Scalar::i(), d1}, {-Scalar::i(), d2}}, d.grading());
}

}  // namespace sweil::fieldops
