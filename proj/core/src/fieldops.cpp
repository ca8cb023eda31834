#include "sweil/fieldops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sweil::fieldops {

namespace {

int energy_sign(Family f) { return (f == Family::gamma || f == Family::eps) ? 1 : -1; }

// m-range of one variable from the slots that depend on it alone
bool var_range(const TermShape& t, int var, int bound, int& lo, int& hi) {
    bool found = false;
    lo = -1000000;
    hi = 1000000;
    for (const Slot& s : t.slots) {
        const int a = var == 0 ? s.a1 : s.a2;
        const int other = var == 0 ? s.a2 : s.a1;
        if (a == 0 || other != 0) continue;
        found = true;
        // |a m + b| <= bound
        int l, h;
        if (a > 0) {
            l = -bound - s.b;
            h = bound - s.b;
        } else {
            l = s.b - bound;
            h = s.b + bound;
        }
        const int aa = std::abs(a);
        // ceil(l / aa), floor(h / aa)
        l = l >= 0 ? (l + aa - 1) / aa : -((-l) / aa);
        h = h >= 0 ? h / aa : -((-h + aa - 1) / aa);
        lo = std::max(lo, l);
        hi = std::min(hi, h);
    }
    return found;
}

using KeySeq = std::vector<PackedKey>;

}  // namespace

Grading term_grading(const TermShape& t) {
    if (t.nvars < 0 || t.nvars > 2) throw std::logic_error("term must have at most two summation variables");
    if (t.slots.empty() || t.slots.size() > 4) throw std::logic_error("term must have between one and four slots");
    Grading g;
    int c1 = 0, c2 = 0;
    int fermions = 0;
    for (const Slot& s : t.slots) {
        const int sg = energy_sign(s.family);
        c1 += sg * s.a1;
        c2 += sg * s.a2;
        g.energy += sg * s.b;
        switch (s.family) {
        case Family::gamma: ++g.deg_s; break;
        case Family::beta: --g.deg_s; break;
        case Family::eps: ++g.deg_l; break;
        case Family::tau: --g.deg_l; break;
        }
        fermions += fock::is_fermion(s.family);
        if ((t.nvars < 2 && s.a2 != 0) || (t.nvars < 1 && s.a1 != 0))
            throw std::logic_error("slot uses an undeclared summation variable");
    }
    if (c1 != 0 || c2 != 0) throw std::logic_error("term energy shift depends on the summation variable");
    g.parity = fermions & 1;
    int lo, hi;
    for (int v = 0; v < t.nvars; ++v)
        if (!var_range(t, v, 0, lo, hi)) throw std::logic_error("summation variable not bounded by any slot");
    return g;
}

FieldOperator::FieldOperator(std::string name, Grading grading, std::vector<TermShape> terms, Scalar constant)
    : name_(std::move(name)), grading_(grading), terms_(std::move(terms)), constant_(std::move(constant)) {
    for (const TermShape& t : terms_) {
        if (!(term_grading(t) == grading_)) throw std::logic_error("term grading disagrees with operator '" + name_ + "'");
        for (const CompTuple& c : t.tuples)
            for (int i = 0; i < 3; ++i)
                if (c.comp[i] < 0 || c.comp[i] >= fock::kMaxComponents)
                    throw std::logic_error("component index out of range");
    }
    if (!constant_.is_zero() && (grading_.parity || grading_.energy || grading_.deg_s || grading_.deg_l))
        throw std::logic_error("constant summand on a graded operator '" + name_ + "'");
}

std::shared_ptr<CompiledOperator> FieldOperator::compile(int max_energy) const {
    auto out = std::make_shared<CompiledOperator>();
    out->max_energy_ = max_energy;
    const int bound = std::max(max_energy, max_energy + grading_.energy);
    if (bound >= fock::kModeBias) throw std::out_of_range("operator window exceeds packable modes");

    std::map<KeySeq, std::pair<Scalar, int>> acc;  // canonical sequence -> (coefficient, creator count)
    struct Item {
        PackedKey key;
        int pos;
        bool creator;
        bool fermion;
    };
    for (const TermShape& t : terms_) {
        int lo[2] = {0, 0}, hi[2] = {0, 0};
        if (t.nvars >= 1) var_range(t, 0, bound, lo[0], hi[0]);
        if (t.nvars == 2) var_range(t, 1, bound, lo[1], hi[1]);
        for (const CompTuple& tup : t.tuples) {
            if (tup.factor.is_zero()) continue;
            for (int m1 = lo[0]; m1 <= hi[0]; ++m1) {
                for (int m2 = lo[1]; m2 <= hi[1]; ++m2) {
                    std::vector<Item> items;
                    bool inside = true;
                    for (std::size_t p = 0; p < t.slots.size(); ++p) {
                        const Slot& s = t.slots[p];
                        const int mode = s.a1 * m1 + s.a2 * m2 + s.b;
                        if (std::abs(mode) > bound) {
                            inside = false;
                            break;
                        }
                        const PackedKey k = fock::pack_unchecked(s.family, tup.comp[s.comp_index], mode);
                        items.push_back({k, static_cast<int>(p), fock::key_is_creator(k), fock::is_fermion(s.family)});
                    }
                    if (!inside) continue;
                    Scalar c = t.coef ? tup.factor * t.coef(m1, m2) : tup.factor;
                    if (c.is_zero()) continue;
                    if (!t.normal_ordered) {
                        for (std::size_t i = 0; i < items.size(); ++i)
                            for (std::size_t j = i + 1; j < items.size(); ++j)
                                if (items[i].key == fock::dual_key(items[j].key))
                                    throw std::logic_error("operator '" + name_ +
                                                           "' has a contractible pair in a term that is not normal-ordered");
                    }
                    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
                        if (a.creator != b.creator) return a.creator;
                        return a.key < b.key;
                    });
                    bool zero = false;
                    int inversions = 0;
                    for (std::size_t i = 0; i < items.size(); ++i) {
                        if (i > 0 && items[i].key == items[i - 1].key && items[i].fermion) zero = true;
                        if (!items[i].fermion) continue;
                        for (std::size_t j = i + 1; j < items.size(); ++j)
                            if (items[j].fermion && items[j].pos < items[i].pos) ++inversions;
                    }
                    if (zero) continue;
                    KeySeq seq;
                    int ncre = 0;
                    for (const Item& it : items) {
                        seq.push_back(it.key);
                        ncre += it.creator;
                    }
                    if (t.keep && !t.keep(seq.data(), static_cast<int>(seq.size()), ncre)) continue;
                    if (inversions & 1) c = -c;
                    auto [pos, fresh] = acc.try_emplace(seq, c, ncre);
                    if (!fresh) pos->second.first += c;
                }
            }
        }
    }

    if (!constant_.is_zero()) {
        Instance inst;
        inst.coef = static_cast<std::uint32_t>(out->coef_.size());
        out->coef_.push_back(constant_);
        out->free_.push_back(inst);
    }
    for (const auto& [seq, val] : acc) {
        const auto& [c, ncre] = val;
        if (c.is_zero()) continue;
        Instance inst;
        const int n = static_cast<int>(seq.size());
        inst.nkeys = static_cast<std::uint8_t>(n);
        int s = 0;
        for (int i = n - 1; i >= ncre; --i) {
            inst.keys[s++] = seq[i];
            inst.req[inst.nreq++] = fock::dual_key(seq[i]);
        }
        for (int i = ncre - 1; i >= 0; --i) inst.keys[s++] = seq[i];
        inst.coef = static_cast<std::uint32_t>(out->coef_.size());
        out->coef_.push_back(c);
        (inst.nreq ? out->bound_ : out->free_).push_back(inst);
    }
    std::stable_sort(out->bound_.begin(), out->bound_.end(),
                     [](const Instance& a, const Instance& b) { return a.req[0] < b.req[0]; });
    if (!out->bound_.empty()) {
        out->start_.assign(65537, 0);
        for (const Instance& inst : out->bound_) ++out->start_[inst.req[0] + 1];
        for (std::size_t i = 1; i < out->start_.size(); ++i) out->start_[i] += out->start_[i - 1];
    }
    return out;
}

std::shared_ptr<const CompiledOperator> FieldOperator::compiled(int max_energy) const {
    if (max_energy < 0) max_energy = 0;
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& v = cache_->by_energy;
    if (static_cast<int>(v.size()) <= max_energy) v.resize(max_energy + 1);
    if (!v[max_energy]) v[max_energy] = compile(max_energy);
    return v[max_energy];
}

FockVector FieldOperator::apply(const FockVector& v) const {
    FockVector out;
    if (v.is_zero()) return out;
    int emax = 0;
    for (const auto& [m, c] : v.terms()) emax = std::max(emax, fock::energy(m));
    auto op = compiled(emax);
    const auto& coefs = op->coefficients();
    for (const auto& [m, c] : v.terms()) {
        op->for_each(m, [&](const Monomial& w, std::int64_t mult, std::uint32_t idx) {
            out.add(w, c * coefs[idx] * Scalar(static_cast<long long>(mult)));
        });
    }
    return out;
}

FieldOperator FieldOperator::scaled(const Scalar& s, std::string name) const {
    std::vector<TermShape> terms = terms_;
    for (TermShape& t : terms)
        for (CompTuple& c : t.tuples) c.factor *= s;
    return FieldOperator(name.empty() ? name_ : std::move(name), grading_, std::move(terms), constant_ * s);
}

FieldOperator FieldOperator::with_constant(const Scalar& c) const {
    return FieldOperator(name_, grading_, terms_, c);
}

FieldOperator FieldOperator::filtered(std::string name, const InstanceFilter& keep) const {
    std::vector<TermShape> terms = terms_;
    for (TermShape& t : terms) {
        if (t.keep) {
            InstanceFilter prev = t.keep;
            t.keep = [prev, keep](const PackedKey* k, int n, int c) { return prev(k, n, c) && keep(k, n, c); };
        } else {
            t.keep = keep;
        }
    }
    return FieldOperator(std::move(name), grading_, std::move(terms));
}

FieldOperator FieldOperator::combine(std::string name, const std::vector<std::pair<Scalar, FieldOperator>>& parts,
                                     const Grading& grading) {
    std::vector<TermShape> terms;
    Scalar constant;
    for (const auto& [s, op] : parts) {
        if (s.is_zero()) continue;
        if (!(op.grading() == grading)) throw std::logic_error("combining operators of different gradings");
        for (TermShape t : op.terms()) {
            for (CompTuple& c : t.tuples) c.factor *= s;
            terms.push_back(std::move(t));
        }
        constant += s * op.constant();
    }
    return FieldOperator(std::move(name), grading, std::move(terms), constant);
}

struct OpExpr::Node {
    enum class Kind { leaf, scalar, product, sum } kind;
    int parity = 0;
    FieldOperator op;
    Scalar value;
    std::vector<std::pair<Scalar, OpExpr>> parts;  // product: two factors, left first
};

OpExpr OpExpr::leaf(FieldOperator op) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::leaf;
    n->parity = op.parity();
    n->op = std::move(op);
    OpExpr e;
    e.node_ = n;
    return e;
}

OpExpr OpExpr::scalar(Scalar c, int parity) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::scalar;
    n->parity = parity;
    n->value = std::move(c);
    OpExpr e;
    e.node_ = n;
    return e;
}

OpExpr OpExpr::product(const OpExpr& a, const OpExpr& b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::product;
    n->parity = (a.parity() + b.parity()) & 1;
    n->parts = {{Scalar(1), a}, {Scalar(1), b}};
    OpExpr e;
    e.node_ = n;
    return e;
}

OpExpr OpExpr::sum(const std::vector<std::pair<Scalar, OpExpr>>& parts) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::sum;
    n->parts = parts;
    n->parity = parts.empty() ? 0 : parts.front().second.parity();
    OpExpr e;
    e.node_ = n;
    return e;
}

int OpExpr::parity() const { return node_ ? node_->parity : 0; }

FockVector OpExpr::apply(const FockVector& v) const {
    if (!node_) return {};
    switch (node_->kind) {
    case Node::Kind::leaf: return node_->op.apply(v);
    case Node::Kind::scalar: return node_->value * v;
    case Node::Kind::product: return node_->parts[0].second.apply(node_->parts[1].second.apply(v));
    case Node::Kind::sum: {
        FockVector out;
        for (const auto& [c, e] : node_->parts) out += c * e.apply(v);
        return out;
    }
    }
    return {};
}

OpExpr super_commutator(const OpExpr& a, const OpExpr& b) {
    const int sign = (a.parity() & b.parity()) ? 1 : -1;
    return OpExpr::sum({{Scalar(1), OpExpr::product(a, b)}, {Scalar(sign), OpExpr::product(b, a)}});
}

}  // namespace sweil::fieldops
