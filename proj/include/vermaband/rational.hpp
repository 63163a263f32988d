#pragma once

// Exact scalar field: Gaussian rationals a + b*i with arbitrary-precision
// rational components.  Every coefficient in the library lives here, so all
// identity checks reduce to exact arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace vermaband {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" or "p"; denominator must be positive after normalization.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long v) : re_(v) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n2 = o.norm_sq();
        Rational re = (re_ * o.re_ + im_ * o.im_) / n2;
        Rational im = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    // "3/4", "1/2i", "(1/2+1/3i)", "0"
    std::string str() const {
        if (im_ == 0) return to_string(re_);
        std::string imag = to_string(im_ < 0 ? Rational(-im_) : im_) + "i";
        if (re_ == 0 && im_ > 0) return imag;
        if (re_ == 0) return "-" + imag;
        return "(" + to_string(re_) + (im_ > 0 ? "+" : "-") + imag + ")";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

}  // namespace vermaband
