#include "sweil/verify.hpp"

#include "sweil/builders.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace sweil::verify {

using algebra::BackendKind;
using fieldops::build_differential_d;
using fieldops::build_koszul_h;
using fieldops::build_n2_family;
using fieldops::build_s2alpha_family;
using fieldops::build_sl2_EHF;
using fieldops::build_tau;
using fieldops::build_theta;
using sca::Gen;
using sca::SCAElement;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string gen_label(const Gen& g, bool n2) { return std::string(sym_name(g.sym, n2)) + "_" + std::to_string(g.n); }

// operators by generator, built on first use
class OpTable {
public:
    using Builder = std::function<FieldOperator(Sym, int)>;
    explicit OpTable(Builder b) : build_(std::move(b)) {}

    int index(const Gen& g) {
        auto it = idx_.find(g);
        if (it != idx_.end()) return it->second;
        ops.push_back(build_(g.sym, g.n));
        return idx_[g] = static_cast<int>(ops.size()) - 1;
    }
    int add(FieldOperator op) {
        ops.push_back(std::move(op));
        return static_cast<int>(ops.size()) - 1;
    }
    std::vector<FieldOperator> ops;

private:
    Builder build_;
    std::map<Gen, int> idx_;
};

// theta([a, b]) + C c(a, b) on the right-hand side
void add_image(OpTable& t, const SCAElement& e, const Scalar& central, std::vector<Word>& words) {
    for (const auto& [g, c] : e.terms()) words.push_back(op(t.index(g), c, true));
    if (!e.central_part().is_zero()) words.push_back(unit(e.central_part() * central, true));
}

std::vector<Monomial> box_states(const GradedBackend& b, const BoxSpec& box) {
    return fock::enumerate_box(b.dim(), fock::Box{box.emax, box.b0max, box.relative, std::nullopt, std::nullopt});
}

RelationReport run(std::string check, std::vector<std::pair<std::string, std::string>> params, const Settings& s,
                   const std::vector<FieldOperator>& ops, const std::vector<Identity>& ids,
                   const std::vector<Monomial>& states, Clock::time_point t0) {
    RelationReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.box = s.box;
    r.states = states.size();
    r.relations = ids.size();
    const auto first = check_identities(ops, ids, states, s.jobs);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (first[i] == kNoFailure) continue;
        r.pass = false;
        const Monomial& v = states[first[i]];
        const Evaluation e = evaluate_identity(ops, ids[i], v);
        r.witness = Witness{ids[i].label, fock::to_text(v), fock::to_text(e.lhs), fock::to_text(e.rhs)};
        break;
    }
    r.millis = millis_since(t0);
    return r;
}

std::vector<std::pair<std::string, std::string>> base_params(const GradedBackend& b, const Settings& s) {
    return {{"backend", b.label}, {"window", std::to_string(s.window)}};
}

std::vector<Gen> window_gens(const std::vector<Sym>& syms, int window) {
    std::vector<Gen> out;
    for (Sym sy : syms)
        for (int n = -window; n <= window; ++n) out.push_back({sy, n});
    return out;
}

// unordered pairs of the window; the table and the commutator are both super-antisymmetric
template <class Bracket>
std::vector<Identity> representation_identities(OpTable& t, const std::vector<Gen>& gens, const Scalar& central,
                                                 bool n2, Bracket&& br) {
    std::vector<Identity> ids;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            Identity id;
            id.label = "[" + gen_label(gens[i], n2) + ", " + gen_label(gens[j], n2) + "]";
            id.words.push_back(comm(t.index(gens[i]), t.index(gens[j])));
            add_image(t, br(gens[i], gens[j]), central, id.words);
            ids.push_back(std::move(id));
        }
    return ids;
}

void require_loop(const GradedBackend& b, const char* what) {
    if (b.kind != BackendKind::loop) throw std::invalid_argument(std::string(what) + " needs a loop backend");
}

}  // namespace

Scalar claimed_central_charge(const GradedBackend& b) {
    if (b.kind == BackendKind::fmu) return Scalar(3) - Scalar(6) * b.lambda;
    if (b.kind == BackendKind::witt) throw std::invalid_argument("no N=2 central charge for the witt backend");
    return Scalar(3 * b.dim());
}

Scalar extract_central_charge(const GradedBackend& b) {
    std::optional<Scalar> c;
    const Monomial vac = fock::vacuum();
    for (int n : {1, 2}) {
        const auto v = fieldops::super_commutator(build_n2_family(b, Sym::H, n), build_n2_family(b, Sym::H, -n)).apply(vac);
        const Scalar level = v.coeff(vac);
        if (!(v == FockVector(vac, level) || (v.is_zero() && level.is_zero())))
            throw std::runtime_error("[H_n, H_-n] vac is not a multiple of vac");
        const Scalar cn = Scalar(3) * level / Scalar(n);
        if (c && !(*c == cn)) throw std::runtime_error("central charge probes disagree: " + c->str() + " vs " + cn.str());
        c = cn;
    }
    return *c;
}

RelationReport check_representation(std::string check, const GradedBackend& b, const std::vector<Sym>& syms,
                                    const RepBuilder& rep, const BracketTable& table, const Scalar& central,
                                    const Settings& s, bool n2_names) {
    const auto t0 = Clock::now();
    OpTable t(rep);
    const auto ids = representation_identities(t, window_gens(syms, s.window), central, n2_names, table);
    auto params = base_params(b, s);
    params.emplace_back("central_charge", central.str());
    return run(std::move(check), std::move(params), s, t.ops, ids, box_states(b, s.box), t0);
}

RelationReport check_n2(const GradedBackend& b, const Settings& s) {
    return check_representation(
        "n2-relations", b, {Sym::L, Sym::H, Sym::h, Sym::p}, [&](Sym sy, int n) { return build_n2_family(b, sy, n); },
        [](const Gen& x, const Gen& y) { return sca::n2_bracket(x.sym, x.n, y.sym, y.n); }, claimed_central_charge(b), s,
        true);
}

RelationReport check_s2a(const GradedBackend& b, const Scalar& alpha, const Settings& s) {
    require_loop(b, "S'(2,alpha)");
    auto r = check_representation(
        "s2a-relations", b, {std::begin(kAllSyms), std::end(kAllSyms)},
        [&](Sym sy, int n) { return build_s2alpha_family(b, alpha, sy, n); },
        [&](const Gen& x, const Gen& y) { return sca::bracket(alpha, x.sym, x.n, y.sym, y.n); },
        claimed_central_charge(b), s);
    r.params.insert(r.params.begin() + 1, {"alpha", alpha.str()});
    return r;
}

std::vector<RelationReport> check_chain(const GradedBackend& b, const Settings& s) {
    if (!b.is_lie()) throw std::invalid_argument("chain identities need a Lie backend");
    const auto states = box_states(b, s.box);
    OpTable t(nullptr);
    const int d = t.add(build_differential_d(b).d);
    const int h = t.add(build_koszul_h(b));
    const Scalar half = Scalar::frac(1, 2);
    std::vector<std::pair<std::string, std::vector<Identity>>> groups;
    groups.push_back({"chain.d2", {{"d^2", {comm(d, d, half)}}}});
    groups.push_back({"chain.h2", {{"h^2", {comm(h, h, half)}}}});
    groups.push_back({"chain.dh", {{"dh + hd", {comm(d, h)}}}});
    groups.push_back({"chain.total", {{"(d + h)^2", {comm(d, d, half), comm(d, h), comm(h, h, half)}}}});
    std::vector<Identity> dtau, dtheta;
    for (int j = 0; j < b.dim(); ++j)
        for (int n = -s.window; n <= s.window; ++n) {
            const std::string x = "x(" + std::to_string(j + 1) + "," + std::to_string(n) + ")";
            const int tau = t.add(build_tau(b, j, n));
            const int th = t.add(build_theta(b, j, n));
            dtau.push_back({"d tau" + x + " + tau" + x + " d = theta" + x, {comm(d, tau), op(th, Scalar(1), true)}});
            dtheta.push_back({"[d, theta" + x + "]", {comm(d, th)}});
        }
    groups.push_back({"chain.dtau", std::move(dtau)});
    groups.push_back({"chain.dtheta", std::move(dtheta)});
    std::vector<RelationReport> out;
    for (auto& [name, ids] : groups) {
        const auto t0 = Clock::now();
        out.push_back(run(name, base_params(b, s), s, t.ops, ids, states, t0));
    }
    return out;
}

RelationReport check_d_compat(const GradedBackend& b, const Settings& s) {
    require_loop(b, "[S'(2,0), d]");
    const auto t0 = Clock::now();
    OpTable t([&](Sym sy, int n) { return build_s2alpha_family(b, Scalar(0), sy, n); });
    const int d = t.add(build_differential_d(b).d);
    std::vector<Identity> ids;
    for (const Gen& g : window_gens({std::begin(kAllSyms), std::end(kAllSyms)}, s.window))
        ids.push_back({"[" + gen_label(g, false) + ", d]", {comm(t.index(g), d)}});
    return run("d-compat", base_params(b, s), s, t.ops, ids, box_states(b, s.box), t0);
}

std::vector<RelationReport> check_relative_derext(const GradedBackend& b, const Settings& s) {
    require_loop(b, "exterior sl(2)");
    const Scalar a0(0);
    OpTable t([&](Sym sy, int n) { return build_s2alpha_family(b, a0, sy, n); });
    const int ders[3] = {t.add(build_sl2_EHF(b, Der::E)), t.add(build_sl2_EHF(b, Der::H)), t.add(build_sl2_EHF(b, Der::F))};
    std::vector<Identity> derext;
    for (Der dd : {Der::E, Der::H, Der::F})
        for (const Gen& g : window_gens({std::begin(kAllSyms), std::end(kAllSyms)}, s.window)) {
            Identity id{"[" + std::string(der_name(dd)) + ", " + gen_label(g, false) + "]", {}};
            id.words.push_back(comm(ders[static_cast<int>(dd)], t.index(g)));
            add_image(t, sca::derext_action(a0, dd, g.sym, g.n), Scalar(0), id.words);
            derext.push_back(std::move(id));
        }
    std::vector<Identity> sl2;
    for (Der x : {Der::E, Der::H, Der::F})
        for (Der y : {Der::E, Der::H, Der::F}) {
            if (static_cast<int>(x) >= static_cast<int>(y)) continue;
            Identity id{"[" + std::string(der_name(x)) + ", " + std::string(der_name(y)) + "]", {}};
            id.words.push_back(comm(ders[static_cast<int>(x)], ders[static_cast<int>(y)]));
            const auto c = sca::derext_bracket(x, y);
            for (int z = 0; z < 3; ++z)
                if (!c[z].is_zero()) id.words.push_back(op(ders[z], c[z], true));
            sl2.push_back(std::move(id));
        }

    Settings rel = s;
    rel.box.relative = true;
    const auto states = box_states(b, rel.box);
    std::vector<RelationReport> out;
    auto t0 = Clock::now();
    out.push_back(run("relative.derext", base_params(b, rel), rel, t.ops, derext, states, t0));
    t0 = Clock::now();
    out.push_back(run("relative.sl2", base_params(b, rel), rel, t.ops, sl2, states, t0));

    // negative control on states outside the relative model: FF never produces
    // the gamma_1 tau_0 summand of h_1

    t0 = Clock::now();
    Settings abs = s;
    abs.box.relative = false;
    std::vector<Monomial> outside;
    for (const Monomial& m : box_states(b, abs.box))
        if (!fock::is_relative(m, b.dim())) outside.push_back(m);
    Identity ctl{"[FF, x_0] - h_1", {comm(ders[2], t.index({Sym::x, 0})), op(t.index({Sym::h, 1}), Scalar(1), true)}};
    const auto first = check_identities(t.ops, {ctl}, outside, s.jobs);
    RelationReport r;
    r.check = "relative.negative-control";
    r.params = base_params(b, abs);
    r.box = abs.box;
    r.states = outside.size();
    r.relations = 1;
    r.pass = first[0] != kNoFailure;
    if (r.pass) {
        const Monomial& v = outside[first[0]];
        const Evaluation e = evaluate_identity(t.ops, ctl, v);
        r.witness = Witness{ctl.label, fock::to_text(v), fock::to_text(e.lhs), fock::to_text(e.rhs)};
    }
    r.millis = millis_since(t0);
    out.push_back(std::move(r));
    return out;
}

}  // namespace sweil::verify
