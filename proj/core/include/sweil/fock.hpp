#pragma once

#include "sweil/scalar.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sweil::fock {

using algebra::Scalar;

// gamma, eps: dual-vector labels x'; beta, tau: vector labels x.
enum class Family : std::uint8_t { gamma = 0, beta = 1, eps = 2, tau = 3 };

constexpr bool is_fermion(Family f) { return f == Family::eps || f == Family::tau; }
constexpr Family dual(Family f) { return static_cast<Family>(static_cast<int>(f) ^ 1); }
// polarization K = 0
constexpr bool is_creator(Family f, int mode) {
    return (f == Family::gamma || f == Family::eps) ? mode > 0 : mode <= 0;
}

// component is 0-based (printed 1-based)
struct GenKey {
    Family family;
    int comp;
    int mode;
    friend bool operator==(const GenKey&, const GenKey&) = default;
};

constexpr bool is_creator(const GenKey& k) { return is_creator(k.family, k.mode); }

// 2 bits family | 8 bits mode+128 | 6 bits component. Numeric order of the
// packed value is the canonical order: family rank, then mode, then component.
using PackedKey = std::uint16_t;
constexpr int kModeBias = 128;
constexpr int kMaxComponents = 64;

constexpr bool packable(int comp, int mode) {
    return comp >= 0 && comp < kMaxComponents && mode >= -kModeBias && mode < kModeBias;
}
constexpr PackedKey pack_unchecked(Family f, int comp, int mode) {
    return static_cast<PackedKey>((static_cast<unsigned>(f) << 14) | (static_cast<unsigned>(mode + kModeBias) << 6) |
                                  static_cast<unsigned>(comp));
}
PackedKey pack(const GenKey& k);
constexpr Family family_of(PackedKey k) { return static_cast<Family>(k >> 14); }
constexpr int mode_of(PackedKey k) { return static_cast<int>((k >> 6) & 0xff) - kModeBias; }
constexpr int comp_of(PackedKey k) { return static_cast<int>(k & 0x3f); }
constexpr PackedKey dual_key(PackedKey k) { return static_cast<PackedKey>(k ^ (1u << 14)); }
constexpr bool key_is_creator(PackedKey k) { return is_creator(family_of(k), mode_of(k)); }
inline GenKey unpack(PackedKey k) { return {family_of(k), comp_of(k), mode_of(k)}; }

extern const std::array<std::uint64_t, 65536> kZobrist;

// Canonical basis state: a multiset of bosonic creators followed by a strictly
// increasing list of fermionic creators, both over packed keys. The hash is a
// sum of per-key random words, maintained incrementally.
class Monomial {
public:
    static constexpr int kCapacity = 30;

    int nb() const { return nb_; }
    int nf() const { return nf_; }
    int size() const { return nb_ + nf_; }
    bool empty() const { return size() == 0; }
    const PackedKey* bosons() const { return k_.data(); }
    const PackedKey* fermions() const { return k_.data() + nb_; }
    std::uint64_t hash() const { return hash_; }

    int boson_count(PackedKey key) const {
        int c = 0;
        for (int i = 0; i < nb_; ++i) {
            if (k_[i] == key) ++c;
            else if (k_[i] > key) break;
        }
        return c;
    }
    void add_boson(PackedKey key) {
        grow();
        int pos = 0;
        while (pos < nb_ && k_[pos] <= key) ++pos;
        std::memmove(&k_[pos + 1], &k_[pos], sizeof(PackedKey) * (size() - pos));
        k_[pos] = key;
        ++nb_;
        hash_ += kZobrist[key];
    }
    void remove_boson(PackedKey key) {
        int pos = 0;
        while (k_[pos] != key) ++pos;
        std::memmove(&k_[pos], &k_[pos + 1], sizeof(PackedKey) * (size() - pos - 1));
        --nb_;
        k_[size()] = 0;
        hash_ -= kZobrist[key];
    }
    int find_fermion(PackedKey key) const {
        const PackedKey* f = fermions();
        for (int i = 0; i < nf_; ++i) {
            if (f[i] == key) return i;
            if (f[i] > key) return -1;
        }
        return -1;
    }
    // position of the inserted key among fermions, or -1 if already present
    int insert_fermion(PackedKey key) {
        PackedKey* f = k_.data() + nb_;
        int pos = 0;
        while (pos < nf_ && f[pos] < key) ++pos;
        if (pos < nf_ && f[pos] == key) return -1;
        grow();
        std::memmove(&f[pos + 1], &f[pos], sizeof(PackedKey) * (nf_ - pos));
        f[pos] = key;
        ++nf_;
        hash_ += kZobrist[key];
        return pos;
    }
    void erase_fermion(int pos) {
        PackedKey* f = k_.data() + nb_;
        hash_ -= kZobrist[f[pos]];
        std::memmove(&f[pos], &f[pos + 1], sizeof(PackedKey) * (nf_ - pos - 1));
        --nf_;
        k_[size()] = 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.hash_ == b.hash_ && a.nb_ == b.nb_ && a.nf_ == b.nf_ &&
               std::memcmp(a.k_.data(), b.k_.data(), sizeof(PackedKey) * a.size()) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // total order: size, then bosons, then fermions (lexicographic on keys)
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    void grow() const {
        if (size() >= kCapacity) throw std::length_error("Fock monomial exceeds capacity");
    }
    std::uint64_t hash_ = 0;
    std::uint8_t nb_ = 0;
    std::uint8_t nf_ = 0;
    std::array<PackedKey, kCapacity> k_{};
};

// Applies one generator in place; returns the integer factor (0 kills the state).
// Annihilators: gamma_m (m<=0) acts as d/d beta_m, beta_m (m>0) as -d/d gamma_m,
// fermionic ones as left derivatives with sign (-1)^position.
inline std::int64_t apply_generator(PackedKey key, Monomial& m) {
    const Family f = family_of(key);
    const bool cre = is_creator(f, mode_of(key));
    if (!is_fermion(f)) {
        if (cre) {
            m.add_boson(key);
            return 1;
        }
        const PackedKey d = dual_key(key);
        const int c = m.boson_count(d);
        if (c == 0) return 0;
        m.remove_boson(d);
        return f == Family::gamma ? c : -c;
    }
    if (cre) {
        const int p = m.insert_fermion(key);
        if (p < 0) return 0;
        return (p & 1) ? -1 : 1;
    }
    const int p = m.find_fermion(dual_key(key));
    if (p < 0) return 0;
    m.erase_fermion(p);
    return (p & 1) ? -1 : 1;
}

// Builds the canonical monomial for a product of creators (leftmost first)
// applied to the vacuum; returns the sign, 0 if a fermion repeats.
int make_monomial(const std::vector<GenKey>& creators, Monomial& out);
Monomial monomial_of(const std::vector<GenKey>& creators);  // throws unless the sign is +1
std::vector<GenKey> keys_of(const Monomial& m);               // bosons then fermions

class FockVector {
public:
    FockVector() = default;
    explicit FockVector(const Monomial& m, Scalar c = Scalar(1)) { add(m, std::move(c)); }

    void add(const Monomial& m, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Scalar& s);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Scalar& s, FockVector a) { return a *= s; }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Scalar> terms_;
};

FockVector apply_generator(const GenKey& key, const FockVector& v);

struct OrderedPair {
    GenKey first;
    GenKey second;
    int sign;
};
// :a b: for a pair of the same statistics: annihilators to the right,
// fermionic swap gives -1, contractions dropped.
OrderedPair normal_order_pair(const GenKey& a, const GenKey& b);

struct Degrees {
    int energy = 0;
    int deg_s = 0;
    int deg_l = 0;
    int a = 0;
    int b = 0;
    friend bool operator==(const Degrees&, const Degrees&) = default;
};
// relative: mode-0 tau keys belong to the relative vacuum and are not counted in b
Degrees energy_and_degrees(const Monomial& m, bool relative = false);
int energy(const Monomial& m);
int zero_boson_count(const Monomial& m);

struct Box {
    int emax = 0;
    int b0max = 0;
    // relative: every tau(u_0) is present (the relative vacuum is their product)
    bool relative = false;
    std::optional<int> deg_s;
    std::optional<int> deg_l;
};

Monomial vacuum();
Monomial relative_vacuum(int dim);
bool is_relative(const Monomial& m, int dim);
std::vector<Monomial> enumerate_box(int dim, const Box& box);

// "g(1,+2) b(1,0) | e(1,+1) t(1,-3)", the empty monomial is "vac"
std::string to_text(const Monomial& m);
Monomial parse_monomial(const std::string& text);
std::string to_text(const FockVector& v);

}  // namespace sweil::fock
