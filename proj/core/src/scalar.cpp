#include "sweil/scalar.hpp"

#include <stdexcept>

namespace sweil::algebra {

Scalar Scalar::frac(long long p, long long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    return Scalar(Rational(p, q));
}

bool Scalar::is_integer() const {
    return boost::multiprecision::denominator(re_) == 1 && boost::multiprecision::denominator(im_) == 1;
}

BigInt Scalar::denominator() const {
    return lcm(boost::multiprecision::denominator(re_), boost::multiprecision::denominator(im_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string rational_str(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string Scalar::str() const {
    if (im_.is_zero()) return rational_str(re_);
    std::string im = rational_str(im_) + "i";
    if (re_.is_zero()) return im;
    if (im_ > 0) return rational_str(re_) + "+" + im;
    return rational_str(re_) + im;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    auto to_int = [](std::string_view s) {
        if (s.empty() || s == "+" || s == "-") throw std::invalid_argument("bad integer");
        std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        std::string t(s[0] == '+' ? s.substr(1) : s);
        return BigInt(t);
    };
    if (slash == std::string_view::npos) return Rational(to_int(text));
    BigInt den = to_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(to_int(text.substr(0, slash)), den);
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if (text.back() != 'i') return Scalar(parse_rational(text));
    std::string_view body = text.substr(0, text.size() - 1);
    // split at the last sign that is not leading
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag = [](std::string_view s) {
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        return parse_rational(s);
    };
    if (split == std::string_view::npos) return Scalar(Rational(0), imag(body));
    return Scalar(parse_rational(body.substr(0, split)), imag(body.substr(split)));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / boost::multiprecision::gcd(a, b) * b);
}

Scalar ipow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
    }
}

}  // namespace sweil::algebra
