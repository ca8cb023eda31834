#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sweil::algebra {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exact element a + b*i of Q(i). Both parts are kept reduced by GMP, so
// equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(long long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar frac(long long p, long long q);
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    // accepts "p", "p/q", "p/q+r/si", "r/si", "i", "-i"
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const;  // both parts have denominator 1
    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    // lcm of the two denominators
    BigInt denominator() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // exact text, e.g. "-3/2+1/4i"
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::string rational_str(const Rational& q);
Rational parse_rational(std::string_view text);
BigInt lcm(const BigInt& a, const BigInt& b);

// i^k for integer k
Scalar ipow(int k);

}  // namespace sweil::algebra
