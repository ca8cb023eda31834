#include "sweil/fock.hpp"

#include <algorithm>
#include <sstream>

namespace sweil::fock {

namespace {

std::array<std::uint64_t, 65536> make_zobrist() {
    std::array<std::uint64_t, 65536> t{};
    std::uint64_t x = 0x9e3779b97f4a7c15ULL;
    for (auto& v : t) {
        // splitmix64
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        v = z ^ (z >> 31);
    }
    return t;
}

char family_char(Family f) {
    switch (f) {
    case Family::gamma: return 'g';
    case Family::beta: return 'b';
    case Family::eps: return 'e';
    case Family::tau: return 't';
    }
    return '?';
}

std::string key_text(PackedKey k) {
    std::ostringstream os;
    int m = mode_of(k);
    os << family_char(family_of(k)) << '(' << comp_of(k) + 1 << ',';
    if (m > 0) os << '+';
    os << m << ')';
    return os.str();
}

}  // namespace

const std::array<std::uint64_t, 65536> kZobrist = make_zobrist();

PackedKey pack(const GenKey& k) {
    if (!packable(k.comp, k.mode)) throw std::out_of_range("generator key outside packable range");
    return pack_unchecked(k.family, k.comp, k.mode);
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.nb_ != b.nb_) return a.nb_ < b.nb_;
    if (a.nf_ != b.nf_) return a.nf_ < b.nf_;
    return std::lexicographical_compare(a.k_.begin(), a.k_.begin() + a.size(), b.k_.begin(), b.k_.begin() + b.size());
}

int make_monomial(const std::vector<GenKey>& creators, Monomial& out) {
    out = Monomial{};
    std::int64_t sign = 1;
    for (auto it = creators.rbegin(); it != creators.rend(); ++it) {
        if (!is_creator(*it)) throw std::invalid_argument("monomial keys must be creators");
        sign *= apply_generator(pack(*it), out);
        if (sign == 0) return 0;
    }
    // bosonic creators only ever contribute 1
    return static_cast<int>(sign);
}

Monomial monomial_of(const std::vector<GenKey>& creators) {
    Monomial m;
    if (make_monomial(creators, m) != 1) throw std::invalid_argument("creator list is not in canonical order");
    return m;
}

std::vector<GenKey> keys_of(const Monomial& m) {
    std::vector<GenKey> out;
    for (int i = 0; i < m.nb(); ++i) out.push_back(unpack(m.bosons()[i]));
    for (int i = 0; i < m.nf(); ++i) out.push_back(unpack(m.fermions()[i]));
    return out;
}

void FockVector::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar FockVector::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

FockVector apply_generator(const GenKey& key, const FockVector& v) {
    const PackedKey k = pack(key);
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        Monomial w = m;
        std::int64_t f = apply_generator(k, w);
        if (f != 0) out.add(w, c * Scalar(static_cast<long long>(f)));
    }
    return out;
}

OrderedPair normal_order_pair(const GenKey& a, const GenKey& b) {
    if (is_fermion(a.family) != is_fermion(b.family))
        throw std::invalid_argument("normal ordering of a mixed-statistics pair");
    if (is_creator(a) || !is_creator(b)) return {a, b, 1};
    return {b, a, is_fermion(a.family) ? -1 : 1};
}

int energy(const Monomial& m) {
    int e = 0;
    for (int i = 0; i < m.size(); ++i) e += std::abs(mode_of(m.bosons()[i]));
    return e;
}

int zero_boson_count(const Monomial& m) {
    int c = 0;
    for (int i = 0; i < m.nb(); ++i) c += mode_of(m.bosons()[i]) == 0;
    return c;
}

Degrees energy_and_degrees(const Monomial& m, bool relative) {
    Degrees d;
    d.energy = energy(m);
    for (int i = 0; i < m.size(); ++i) {
        const PackedKey k = m.bosons()[i];
        switch (family_of(k)) {
        case Family::gamma: ++d.deg_s; break;
        case Family::beta: --d.deg_s; break;
        case Family::eps:
            ++d.deg_l;
            ++d.a;
            break;
        case Family::tau:
            --d.deg_l;
            if (!relative || mode_of(k) != 0) ++d.b;
            break;
        }
    }
    return d;
}

Monomial vacuum() { return Monomial{}; }

Monomial relative_vacuum(int dim) {
    Monomial m;
    for (int u = dim - 1; u >= 0; --u) m.insert_fermion(pack({Family::tau, u, 0}));
    return m;
}

bool is_relative(const Monomial& m, int dim) {
    for (int u = 0; u < dim; ++u)
        if (m.find_fermion(pack_unchecked(Family::tau, u, 0)) < 0) return false;
    return true;
}

std::vector<Monomial> enumerate_box(int dim, const Box& box) {
    if (box.emax < 0 || box.b0max < 0) throw std::invalid_argument("box budgets must be nonnegative");
    if (dim <= 0 || dim > kMaxComponents) throw std::invalid_argument("bad component count");
    if (box.emax >= kModeBias) throw std::invalid_argument("box energy too large");
    struct Slot {
        PackedKey key;
        int energy;
        bool fermion;
    };
    std::vector<Slot> slots;
    for (int u = 0; u < dim; ++u) {
        if (!box.relative) slots.push_back({pack_unchecked(Family::tau, u, 0), 0, true});
        slots.push_back({pack_unchecked(Family::beta, u, 0), 0, false});
        for (int k = 1; k <= box.emax; ++k) {
            slots.push_back({pack_unchecked(Family::eps, u, k), k, true});
            slots.push_back({pack_unchecked(Family::tau, u, -k), k, true});
            slots.push_back({pack_unchecked(Family::gamma, u, k), k, false});
            slots.push_back({pack_unchecked(Family::beta, u, -k), k, false});
        }
    }
    std::vector<Monomial> out;
    const Monomial base = box.relative ? relative_vacuum(dim) : Monomial{};
    auto rec = [&](auto&& self, std::size_t i, int e_left, int b0_left, Monomial cur) -> void {
        if (i == slots.size()) {
            if (box.deg_s || box.deg_l) {
                Degrees d = energy_and_degrees(cur, box.relative);
                if (box.deg_s && d.deg_s != *box.deg_s) return;
                if (box.deg_l && d.deg_l != *box.deg_l) return;
            }
            out.push_back(cur);
            return;
        }
        const Slot& s = slots[i];
        self(self, i + 1, e_left, b0_left, cur);
        if (s.fermion) {
            if (s.energy <= e_left) {
                cur.insert_fermion(s.key);
                self(self, i + 1, e_left - s.energy, b0_left, cur);
            }
            return;
        }
        for (int n = 1;; ++n) {
            if (s.energy == 0 ? n > b0_left : n * s.energy > e_left) break;
            cur.add_boson(s.key);
            self(self, i + 1, e_left - n * s.energy, s.energy == 0 ? b0_left - n : b0_left, cur);
        }
    };
    rec(rec, 0, box.emax, box.b0max, base);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int ea = energy(a), eb = energy(b);
        if (ea != eb) return ea < eb;
        return a < b;
    });
    return out;
}

std::string to_text(const Monomial& m) {
    if (m.empty()) return "vac";
    std::string s;
    for (int i = 0; i < m.nb(); ++i) {
        if (i) s += ' ';
        s += key_text(m.bosons()[i]);
    }
    s += m.nb() ? " |" : "|";
    for (int i = 0; i < m.nf(); ++i) s += ' ' + key_text(m.fermions()[i]);
    return s;
}

Monomial parse_monomial(const std::string& text) {
    if (text == "vac") return Monomial{};
    std::vector<GenKey> keys;
    bool after_bar = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ') {
            ++i;
            continue;
        }
        if (c == '|') {
            after_bar = true;
            ++i;
            continue;
        }
        Family f;
        switch (c) {
        case 'g': f = Family::gamma; break;
        case 'b': f = Family::beta; break;
        case 'e': f = Family::eps; break;
        case 't': f = Family::tau; break;
        default: throw std::invalid_argument("bad monomial text '" + text + "'");
        }
        if (is_fermion(f) != after_bar) throw std::invalid_argument("bosons must precede '|' in '" + text + "'");
        auto close = text.find(')', i);
        auto comma = text.find(',', i);
        if (i + 1 >= text.size() || text[i + 1] != '(' || close == std::string::npos || comma > close)
            throw std::invalid_argument("bad monomial text '" + text + "'");
        int comp = std::stoi(text.substr(i + 2, comma - i - 2));
        int mode = std::stoi(text.substr(comma + 1, close - comma - 1));
        keys.push_back({f, comp - 1, mode});
        i = close + 1;
    }
    return monomial_of(keys);
}

std::string to_text(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")*[" + to_text(m) + "]";
    }
    return s;
}

}  // namespace sweil::fock
