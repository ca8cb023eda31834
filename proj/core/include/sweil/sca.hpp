#pragma once

#include "sweil/scalar.hpp"
#include "sweil/symbols.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sweil::sca {

using algebra::Rational;
using algebra::Scalar;

struct Gen {
    Sym sym;
    int n;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Finite combination of generators plus a multiple of the central element C.
class SCAElement {
public:
    SCAElement() = default;
    static SCAElement gen(Sym s, int n, Scalar c = Scalar(1));
    static SCAElement central(Scalar c);

    void add(const Gen& g, const Scalar& c);
    const std::map<Gen, Scalar>& terms() const { return terms_; }
    const Scalar& central_part() const { return central_; }
    bool is_zero() const { return terms_.empty() && central_.is_zero(); }
    // parity if homogeneous (the central element is even)
    std::optional<int> parity() const;
    SCAElement centerless() const;

    SCAElement& operator+=(const SCAElement& o);
    SCAElement& operator-=(const SCAElement& o);
    SCAElement& operator*=(const Scalar& s);
    friend SCAElement operator+(SCAElement a, const SCAElement& b) { return a += b; }
    friend SCAElement operator-(SCAElement a, const SCAElement& b) { return a -= b; }
    friend SCAElement operator*(const Scalar& s, SCAElement a) { return a *= s; }
    friend bool operator==(const SCAElement& a, const SCAElement& b) {
        return a.terms_ == b.terms_ && a.central_ == b.central_;
    }

    // "2*Lalpha_0 + -1/2*H_0 + 3*C"; n2 prints L for the N=2 Virasoro symbol
    std::string str(bool n2 = false) const;

private:
    std::map<Gen, Scalar> terms_;
    Scalar central_;
};

// S'(2,alpha) table with its cocycle, on basis elements and bilinearly
SCAElement bracket(const Scalar& alpha, Sym a, int n, Sym b, int k);
SCAElement bracket(const Scalar& alpha, const SCAElement& a, const SCAElement& b);

// N=2 table, symbols L, H, h, p with h_n ~ G+_{n-1/2}, p_n ~ G-_{n+1/2}
SCAElement n2_bracket(Sym a, int n, Sym b, int k);
SCAElement n2_bracket(const SCAElement& a, const SCAElement& b);
// [G^{s1}_{r1}, ...] in the half-integer form; r given as 2r (odd), sign +1/-1
struct GTerm {
    enum Kind { L, H, G } kind;
    int sign = 0;    // G only
    int index2 = 0;  // twice the mode
    Scalar coef;
};
struct GBracket {
    std::vector<GTerm> terms;
    Scalar central;
};
GBracket n2_g_bracket(const GTerm& a, const GTerm& b);

// N=2 subalgebra of S'(2,alpha) -> N=2
SCAElement spectral_flow(const Scalar& alpha, const SCAElement& a);

Scalar deg(const Scalar& alpha, Sym s, int n);
SCAElement L0_element(const Scalar& alpha);

bool is_integer(const Scalar& alpha);
// [D, s] for D in the exterior sl(2); E and F need integer alpha
SCAElement derext_action(const Scalar& alpha, Der d, Sym s, int n);
SCAElement derext_action(const Scalar& alpha, Der d, const SCAElement& a);
// the sl(2) relations among E, H, F: returns coefficients on (E, H, F)
std::array<Scalar, 3> derext_bracket(Der a, Der b);

struct JacobiReport {
    bool pass = true;
    std::string witness;
};
// super-antisymmetry, super-Jacobi and the cocycle condition on |n| <= window
JacobiReport check_super_jacobi(const Scalar& alpha, int window);
// derivation property of E, H, F (including the central part) on |n| <= window
JacobiReport check_derext_derivations(const Scalar& alpha, int window);

// nonzero brackets of unordered basis pairs on |n| <= window, one line each
std::vector<std::string> table_lines(const Scalar& alpha, int window);
struct TableDiff {
    std::string pair;
    std::string table;   // centerless table value
    std::string oracle;  // bracket of the realizations
};
// the table against brackets of vector-field realizations, all ordered pairs
std::vector<TableDiff> vf_table_diff(const Scalar& alpha, int window);
// spectral flow is a bracket homomorphism on the N=2 symbols L, H, h, p
JacobiReport check_spectral_flow(const Scalar& alpha, int window);
// [F as a vector field, X] against the F-action, integer alpha
JacobiReport check_F_identification(const Scalar& alpha, int window);

// The Kahler superalgebra: Laplacian, L, H, Lambda, d, d*, d_c, d_c*
enum class KSym : std::uint8_t { Delta, L, H, Lambda, d, dstar, dc, dcstar };
constexpr KSym kAllKSyms[] = {KSym::Delta, KSym::L, KSym::H, KSym::Lambda, KSym::d, KSym::dstar, KSym::dc, KSym::dcstar};
constexpr int kparity(KSym s) { return static_cast<int>(s) >= static_cast<int>(KSym::d) ? 1 : 0; }
std::string_view ksym_name(KSym s);
using KElement = std::map<KSym, Scalar>;
KElement kahler_bracket(KSym a, KSym b);
// lifted: psi(H) = H_0 - C/6, absorbing the cocycle value c(E_{-1}, F_1)
SCAElement psi(KSym s, bool lifted = false);
SCAElement psi(const KElement& k, bool lifted = false);

// ---- super vector field oracle ----

// Laurent polynomial in t tensored with the Grassmann algebra on theta1, theta2.
// Keys (t power, theta mask), bit 0 = theta1, bit 1 = theta2.
class SuperFunction {
public:
    void add(int tpow, int mask, const Scalar& c);
    const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SuperFunction& operator+=(const SuperFunction& o);
    SuperFunction& operator*=(const Scalar& s);
    friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
    friend bool operator==(const SuperFunction&, const SuperFunction&) = default;
    SuperFunction dt() const;
    SuperFunction dtheta(int i) const;  // left derivative, i in {1, 2}
    std::string str() const;

private:
    std::map<std::pair<int, int>, Scalar> terms_;
};

// coefficients on (d_t, d_1, d_2)
struct SuperVectorField {
    std::array<SuperFunction, 3> coef;
    int parity = 0;
    friend bool operator==(const SuperVectorField& a, const SuperVectorField& b) { return a.coef == b.coef; }
    std::string str() const;
};

SuperVectorField vf_realize(const Scalar& alpha, Sym s, int n);
SuperVectorField vf_realize(const Scalar& alpha, const SCAElement& a);  // central part dropped
// -t^{-alpha} theta1 theta2 d_t, alpha integer
SuperVectorField vf_F_derivation(const Scalar& alpha);
SuperFunction vf_apply(const SuperVectorField& x, const SuperFunction& f);
SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y);
SuperFunction divergence(const SuperVectorField& x);
// alpha t^{-1} X^t + Div X, zero iff Div(t^alpha X) = 0
SuperFunction twisted_divergence(const Scalar& alpha, const SuperVectorField& x);

}  // namespace sweil::sca
