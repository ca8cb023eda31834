#include "sweil/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace sweil::verify {

using fieldops::CompiledOperator;
using fieldops::Instance;
using fock::PackedKey;

Word comm(int a, int b, Scalar c, bool rhs) { return {Word::Comm, a, b, std::move(c), rhs}; }
Word op(int a, Scalar c, bool rhs) { return {Word::Op, a, -1, std::move(c), rhs}; }
Word unit(Scalar c, bool rhs) { return {Word::Unit, -1, -1, std::move(c), rhs}; }

namespace {

using i128 = __int128;

struct GInt {
    i128 re = 0;
    i128 im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
};

[[noreturn]] void overflow() { throw std::overflow_error("identity kernel: coefficient overflow"); }

i128 mul1(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}
i128 add1(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}
GInt operator*(const GInt& a, const GInt& b) {
    return {add1(mul1(a.re, b.re), -mul1(a.im, b.im)), add1(mul1(a.re, b.im), mul1(a.im, b.re))};
}
GInt scale(const GInt& a, i128 s) { return {mul1(a.re, s), mul1(a.im, s)}; }
GInt& operator+=(GInt& a, const GInt& b) {
    a.re = add1(a.re, b.re);
    a.im = add1(a.im, b.im);
    return a;
}

i128 to_i128(const algebra::Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) != 1) throw std::logic_error("identity kernel: scaled coefficient is not integral");
    const algebra::BigInt& n = numerator(q);
    if (boost::multiprecision::abs(n) > algebra::BigInt(std::numeric_limits<long long>::max())) overflow();
    return static_cast<i128>(n.convert_to<long long>());
}

GInt to_gint(const Scalar& s, const algebra::BigInt& lam) {
    const algebra::Rational l(lam);
    return {to_i128(s.re() * l), to_i128(s.im() * l)};
}

struct OpData {
    std::shared_ptr<const CompiledOperator> comp;
    std::vector<Instance> inst;  // free, then bound
    std::uint32_t nfree = 0;
    std::vector<GInt> coef;      // per instance: lambda * coefficient * sign
    std::vector<std::uint32_t> cand_start;
    std::vector<std::uint32_t> cand;  // instances holding the dual of a key
    int parity = 0;

    std::pair<const std::uint32_t*, const std::uint32_t*> candidates(PackedKey k) const {
        return {cand.data() + cand_start[k], cand.data() + cand_start[k + 1]};
    }
};

bool contains(const Monomial& v, PackedKey k) {
    const PackedKey* keys = v.bosons();
    for (int i = 0, n = v.size(); i < n; ++i)
        if (keys[i] == k) return true;
    return false;
}

// multiplicity of inst on v (0 if it kills v); out receives the image
std::int64_t apply_instance(const Instance& inst, const Monomial& v, Monomial& out) {
    for (int r = 0; r < inst.nreq; ++r)
        if (!contains(v, inst.req[r])) return 0;
    out = v;
    std::int64_t m = 1;
    for (int s = 0; s < inst.nkeys; ++s) {
        m *= fock::apply_generator(inst.keys[s], out);
        if (m == 0) return 0;
    }
    return m;
}

class Accumulator {
public:
    Accumulator() { resize(1024); }

    void add(const Monomial& m, const GInt& c) {
        if (c.is_zero()) return;
        if (2 * (used_.size() + 1) > slots_.size()) grow();
        std::size_t i = m.hash() & mask_;
        while (true) {
            Slot& s = slots_[i];
            if (!s.used) {
                s.used = true;
                s.m = m;
                s.v = c;
                used_.push_back(static_cast<std::uint32_t>(i));
                return;
            }
            if (s.m == m) {
                s.v += c;
                return;
            }
            i = (i + 1) & mask_;
        }
    }
    bool all_zero() const {
        for (std::uint32_t i : used_)
            if (!slots_[i].v.is_zero()) return false;
        return true;
    }
    void clear() {
        for (std::uint32_t i : used_) slots_[i].used = false;
        used_.clear();
    }

private:
    struct Slot {
        Monomial m;
        GInt v;
        bool used = false;
    };
    void resize(std::size_t n) {
        slots_.assign(n, Slot{});
        mask_ = n - 1;
    }
    void grow() {
        std::vector<Slot> old;
        old.swap(slots_);
        resize(old.size() * 2);
        used_.clear();
        for (Slot& s : old)
            if (s.used) add(s.m, s.v);
    }
    std::vector<Slot> slots_;
    std::vector<std::uint32_t> used_;
    std::size_t mask_ = 0;
};

struct App {
    std::uint32_t inst;
    std::int64_t mult;
    Monomial w;
};

class Worker {
public:
    Worker(const std::vector<OpData>& ops) : ops_(ops), apps_(ops.size()), stamp_(ops.size(), kNoFailure), seen_(ops.size()) {
        for (std::size_t i = 0; i < ops.size(); ++i) seen_[i].assign(ops[i].inst.size(), 0);
    }

    // true iff sum of words vanishes on states[idx]
    bool check(const std::vector<std::pair<Word, GInt>>& words, const Monomial& v, std::size_t idx, const GInt& lam2) {
        acc_.clear();
        for (const auto& [w, wc] : words) {
            switch (w.kind) {
            case Word::Unit: acc_.add(v, wc * lam2); break;
            case Word::Op: {
                const OpData& a = ops_[w.a];
                for (const App& ap : apps(w.a, v, idx)) acc_.add(ap.w, scale(wc * a.coef[ap.inst], lam_ * ap.mult));
                break;
            }
            case Word::Comm: {
                const i128 sba = (ops_[w.a].parity && ops_[w.b].parity) ? 1 : -1;
                half(w.a, w.b, wc, v, idx);
                half(w.b, w.a, scale(wc, sba), v, idx);
                break;
            }
            }
        }
        return acc_.all_zero();
    }

    void set_lambda(i128 lam) { lam_ = lam; }

private:
    // sum over interacting pairs of x * y * v, y applied first
    void half(int x, int y, const GInt& wc, const Monomial& v, std::size_t idx) {
        const OpData& ox = ops_[x];
        const OpData& oy = ops_[y];
        auto& seen = seen_[x];
        const auto& ay = apps(y, v, idx);
        Monomial out;
        for (const App& ap : ay) {
            const Instance& iy = oy.inst[ap.inst];
            if (iy.nkeys == 0) continue;
            if (++tick_ == 0) {
                for (auto& s : seen_) std::fill(s.begin(), s.end(), 0);
                tick_ = 1;
            }
            const GInt cy = wc * oy.coef[ap.inst];
            for (int s = 0; s < iy.nkeys; ++s) {
                auto [lo, hi] = ox.candidates(iy.keys[s]);
                for (const std::uint32_t* p = lo; p != hi; ++p) {
                    if (seen[*p] == tick_) continue;
                    seen[*p] = tick_;
                    const std::int64_t m = apply_instance(ox.inst[*p], ap.w, out);
                    if (m) acc_.add(out, scale(cy * ox.coef[*p], static_cast<i128>(m) * ap.mult));
                }
            }
        }
    }

    const std::vector<App>& apps(int o, const Monomial& v, std::size_t idx) {
        if (stamp_[o] == idx) return apps_[o];
        stamp_[o] = idx;
        auto& list = apps_[o];
        list.clear();
        const OpData& d = ops_[o];
        Monomial out;
        auto run = [&](std::uint32_t i) {
            const std::int64_t m = apply_instance(d.inst[i], v, out);
            if (m) list.push_back({i, m, out});
        };
        for (std::uint32_t i = 0; i < d.nfree; ++i) {
            if (d.inst[i].nkeys == 0) {
                list.push_back({i, 1, v});
                continue;
            }
            run(i);
        }
        const PackedKey* keys = v.bosons();
        for (int i = 0, n = v.size(); i < n; ++i) {
            if (i > 0 && keys[i] == keys[i - 1]) continue;
            auto [lo, hi] = d.comp->bucket(keys[i]);
            for (std::uint32_t j = lo; j < hi; ++j) run(d.nfree + j);
        }
        return list;
    }

    const std::vector<OpData>& ops_;
    std::vector<std::vector<App>> apps_;
    std::vector<std::size_t> stamp_;
    std::vector<std::vector<std::uint32_t>> seen_;
    std::uint32_t tick_ = 0;
    i128 lam_ = 1;
    Accumulator acc_;
};

algebra::BigInt lcm_big(const algebra::BigInt& a, const algebra::BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace

std::vector<std::size_t> check_identities(const std::vector<FieldOperator>& ops, const std::vector<Identity>& ids,
                                          const std::vector<Monomial>& states, int jobs) {
    std::vector<std::size_t> first(ids.size(), kNoFailure);
    if (states.empty() || ids.empty()) return first;
    for (const Identity& id : ids)
        for (const Word& w : id.words)
            if ((w.kind != Word::Unit && (w.a < 0 || w.a >= static_cast<int>(ops.size()))) ||
                (w.kind == Word::Comm && (w.b < 0 || w.b >= static_cast<int>(ops.size()))))
                throw std::out_of_range("identity '" + id.label + "' refers to a missing operator");

    int emax = 0;
    for (const Monomial& m : states) emax = std::max(emax, fock::energy(m));
    int shift = 0;
    for (const FieldOperator& o : ops) shift = std::max(shift, o.grading().energy);
    const int ecomp = emax + shift;

    std::vector<OpData> data(ops.size());
    algebra::BigInt lam(1);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        OpData& d = data[i];
        d.comp = ops[i].compiled(ecomp);
        d.parity = ops[i].parity();
        for (const Scalar& c : d.comp->coefficients()) lam = lcm_big(lam, c.denominator());
    }
    for (const Identity& id : ids)
        for (const Word& w : id.words) lam = lcm_big(lam, w.coef.denominator());
    if (lam > algebra::BigInt(1) << 40) overflow();
    const i128 lam_i = static_cast<i128>(lam.convert_to<long long>());

    for (OpData& d : data) {
        const auto& fr = d.comp->free_instances();
        const auto& bd = d.comp->bound_instances();
        d.inst.assign(fr.begin(), fr.end());
        d.inst.insert(d.inst.end(), bd.begin(), bd.end());
        d.nfree = static_cast<std::uint32_t>(fr.size());
        for (const Instance& in : d.inst) {
            GInt c = to_gint(d.comp->coefficients()[in.coef], lam);
            if (in.sign < 0) c = scale(c, -1);
            d.coef.push_back(c);
        }
        // candidate lists: h -> instances containing dual(h)
        std::vector<std::pair<PackedKey, std::uint32_t>> pairs;
        for (std::uint32_t i = 0; i < d.inst.size(); ++i) {
            const Instance& in = d.inst[i];
            for (int s = 0; s < in.nkeys; ++s) {
                bool dup = false;
                for (int t = 0; t < s; ++t) dup |= in.keys[t] == in.keys[s];
                if (!dup) pairs.emplace_back(fock::dual_key(in.keys[s]), i);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        d.cand_start.assign(65537, 0);
        for (const auto& [h, i] : pairs) ++d.cand_start[h + 1];
        for (std::size_t k = 1; k < d.cand_start.size(); ++k) d.cand_start[k] += d.cand_start[k - 1];
        for (const auto& pr : pairs) d.cand.push_back(pr.second);
    }

    std::vector<std::vector<std::pair<Word, GInt>>> scaled(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (const Word& w : ids[i].words) {
            GInt c = to_gint(w.coef, lam);
            if (w.rhs) c = scale(c, -1);
            scaled[i].emplace_back(w, c);
        }
    const GInt lam2{mul1(lam_i, lam_i), 0};

    constexpr std::size_t kChunk = 16;
    std::atomic<std::size_t> next{0};
    const int nthreads = std::max(1, jobs);
    std::vector<std::vector<std::size_t>> local(nthreads, std::vector<std::size_t>(ids.size(), kNoFailure));
    std::vector<std::exception_ptr> errors(nthreads);
    auto body = [&](int t) {
        try {
            Worker w(data);
            w.set_lambda(lam_i);
            auto& mine = local[t];
            while (true) {
                const std::size_t lo = next.fetch_add(kChunk);
                if (lo >= states.size()) break;
                const std::size_t hi = std::min(states.size(), lo + kChunk);
                for (std::size_t s = lo; s < hi; ++s)
                    for (std::size_t i = 0; i < ids.size(); ++i)
                        if (mine[i] > s && !w.check(scaled[i], states[s], s, lam2)) mine[i] = s;
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (nthreads == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(body, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& l : local)
        for (std::size_t i = 0; i < ids.size(); ++i) first[i] = std::min(first[i], l[i]);
    return first;
}

Evaluation evaluate_identity(const std::vector<FieldOperator>& ops, const Identity& id, const Monomial& v) {
    Evaluation e;
    for (const Word& w : id.words) {
        FockVector part;
        switch (w.kind) {
        case Word::Unit: part = FockVector(v); break;
        case Word::Op: part = ops.at(w.a).apply(v); break;
        case Word::Comm: part = fieldops::super_commutator(ops.at(w.a), ops.at(w.b)).apply(v); break;
        }
        part *= w.coef;
        (w.rhs ? e.rhs : e.lhs) += part;
    }
    return e;
}

}  // namespace sweil::verify
