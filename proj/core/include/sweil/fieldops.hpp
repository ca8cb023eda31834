#pragma once

#include "sweil/fock.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace sweil::fieldops {

using algebra::Scalar;
using fock::Family;
using fock::FockVector;
using fock::Monomial;
using fock::PackedKey;

// One generator factor: family, component taken from the term's component
// tuple, and mode a1*m1 + a2*m2 + b in the summation variables.
struct Slot {
    Family family;
    int comp_index = 0;
    int a1 = 0;
    int a2 = 0;
    int b = 0;
};

struct CompTuple {
    std::array<int, 3> comp{};
    Scalar factor{1};
};

using ModeCoef = std::function<Scalar(int m1, int m2)>;
// Called on each expanded summand in canonical order (creators first, both
// halves sorted); returning false drops the summand.
using InstanceFilter = std::function<bool(const PackedKey* keys, int n, int ncreators)>;

// sum over tuples and the nvars (0..2) summation variables m1, m2 of
//   factor(tuple) * coef(m1, m2) * slot_0 slot_1 ... (leftmost first)
// normal-ordered when the flag is set. Terms without the flag must not contain
// a pair of mutually dual generators (checked when compiled).
struct TermShape {
    std::vector<Slot> slots;
    int nvars = 1;
    std::vector<CompTuple> tuples;
    ModeCoef coef;  // empty: constant 1
    bool normal_ordered = true;
    InstanceFilter keep;  // empty: keep all
};

struct Grading {
    int parity = 0;
    int energy = 0;  // change of energy
    int deg_s = 0;
    int deg_l = 0;
    friend bool operator==(const Grading&, const Grading&) = default;
};

// Term grading from its slots; throws if the energy shift depends on the
// summation variables or if a variable is not bounded by a slot of its own.
Grading term_grading(const TermShape& t);

// A fully expanded summand: annihilators applied first, then creators.
struct Instance {
    std::array<PackedKey, 4> keys{};  // application order
    std::array<PackedKey, 4> req{};   // keys that must be present in the input
    std::uint8_t nkeys = 0;
    std::uint8_t nreq = 0;
    std::int8_t sign = 1;
    std::uint32_t coef = 0;  // index into CompiledOperator::coefficients()
};

// All instances of an operator that can act nontrivially on inputs of energy
// at most max_energy. Instances needing annihilation are bucketed by their
// first required key. A constant summand is a keyless free instance.
class CompiledOperator {
public:
    int max_energy() const { return max_energy_; }
    const std::vector<Scalar>& coefficients() const { return coef_; }
    std::size_t instance_count() const { return free_.size() + bound_.size(); }
    // instances without annihilators (including a constant summand), and the rest
    const std::vector<Instance>& free_instances() const { return free_; }
    const std::vector<Instance>& bound_instances() const { return bound_; }
    // bound instances whose first required key is k: [first, second)
    std::pair<std::uint32_t, std::uint32_t> bucket(PackedKey k) const {
        if (bound_.empty()) return {0, 0};
        return {start_[k], start_[k + 1]};
    }

    // f(const Monomial& out, std::int64_t multiplicity, std::uint32_t coef_index)
    template <class F>
    void for_each(const Monomial& in, F&& f) const {
        const int n = in.size();
        const PackedKey* keys = in.bosons();
        if (!bound_.empty()) {
            for (int i = 0; i < n; ++i) {
                const PackedKey k = keys[i];
                if (i > 0 && keys[i - 1] == k) continue;
                const std::uint32_t lo = start_[k], hi = start_[k + 1];
                for (std::uint32_t j = lo; j < hi; ++j) run(bound_[j], in, f);
            }
        }
        for (const Instance& inst : free_) run(inst, in, f);
    }

private:
    friend class FieldOperator;

    template <class F>
    static void run(const Instance& inst, const Monomial& in, F& f) {
        for (int r = 1; r < inst.nreq; ++r) {
            const PackedKey k = inst.req[r];
            bool found = false;
            for (int i = 0; i < in.size(); ++i)
                if (in.bosons()[i] == k) {
                    found = true;
                    break;
                }
            if (!found) return;
        }
        Monomial out = in;
        std::int64_t mult = inst.sign;
        for (int s = 0; s < inst.nkeys; ++s) {
            mult *= fock::apply_generator(inst.keys[s], out);
            if (mult == 0) return;
        }
        f(out, mult, inst.coef);
    }

    int max_energy_ = 0;
    std::vector<Instance> free_;
    std::vector<Instance> bound_;
    std::vector<std::uint32_t> start_;
    std::vector<Scalar> coef_;
};

class FieldOperator {
public:
    FieldOperator() = default;
    // grading is checked against every term; terms may be empty (zero operator)
    FieldOperator(std::string name, Grading grading, std::vector<TermShape> terms, Scalar constant = Scalar(0));

    const std::string& name() const { return name_; }
    const Grading& grading() const { return grading_; }
    int parity() const { return grading_.parity; }
    const std::vector<TermShape>& terms() const { return terms_; }
    const Scalar& constant() const { return constant_; }

    // instances for inputs of energy <= max_energy (cached)
    std::shared_ptr<const CompiledOperator> compiled(int max_energy) const;

    FockVector apply(const FockVector& v) const;
    FockVector apply(const Monomial& m) const { return apply(FockVector(m)); }

    FieldOperator scaled(const Scalar& s, std::string name = {}) const;
    FieldOperator with_constant(const Scalar& c) const;
    // same terms restricted by an additional summand filter; drops the constant
    FieldOperator filtered(std::string name, const InstanceFilter& keep) const;
    // all parts must share the grading
    static FieldOperator combine(std::string name, const std::vector<std::pair<Scalar, FieldOperator>>& parts,
                                 const Grading& grading);

private:
    std::shared_ptr<CompiledOperator> compile(int max_energy) const;

    struct Cache {
        std::mutex mu;
        std::vector<std::shared_ptr<const CompiledOperator>> by_energy;
    };
    std::string name_;
    Grading grading_;
    std::vector<TermShape> terms_;
    Scalar constant_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Formal combination of products of operators plus a scalar; evaluated pointwise.
class OpExpr {
public:
    OpExpr() = default;
    static OpExpr leaf(FieldOperator op);
    static OpExpr scalar(Scalar c, int parity = 0);
    static OpExpr product(const OpExpr& a, const OpExpr& b);
    static OpExpr sum(const std::vector<std::pair<Scalar, OpExpr>>& parts);

    int parity() const;
    FockVector apply(const FockVector& v) const;
    FockVector apply(const Monomial& m) const { return apply(FockVector(m)); }

    friend OpExpr operator+(const OpExpr& a, const OpExpr& b) { return sum({{Scalar(1), a}, {Scalar(1), b}}); }
    friend OpExpr operator-(const OpExpr& a, const OpExpr& b) { return sum({{Scalar(1), a}, {Scalar(-1), b}}); }
    friend OpExpr operator*(const OpExpr& a, const OpExpr& b) { return product(a, b); }
    friend OpExpr operator*(const Scalar& c, const OpExpr& a) { return sum({{c, a}}); }

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// [A, B] = AB - (-1)^{p(A)p(B)} BA, composed lazily
OpExpr super_commutator(const OpExpr& a, const OpExpr& b);
inline OpExpr super_commutator(const FieldOperator& a, const FieldOperator& b) {
    return super_commutator(OpExpr::leaf(a), OpExpr::leaf(b));
}

}  // namespace sweil::fieldops
