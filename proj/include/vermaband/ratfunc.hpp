#pragma once

// Rational functions of one integer-valued formal variable n, kept in
// canonical form: gcd(num, den) = 1, den monic, zero stored as 0/1.
// Canonical form makes equality a structural comparison, which is what the
// exact operator-identity checks rely on.

#include "vermaband/polynomial.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace vermaband {

struct PoleError : std::domain_error {
    explicit PoleError(long long k)
        : std::domain_error("pole at n = " + std::to_string(k)), at(k) {}
    long long at;
};

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("division by the zero function") {}
};

inline constexpr int kDecayInfinity = std::numeric_limits<int>::max();

class RatFunc {
public:
    RatFunc() : den_(GaussianRational(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
    explicit RatFunc(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}
    explicit RatFunc(long long c) : RatFunc(GaussianRational(Rational(c))) {}
    explicit RatFunc(const Rational& c) : RatFunc(GaussianRational(c)) {}

    static RatFunc n() { return RatFunc(Poly::variable(), Poly(GaussianRational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_real() const { return num_.is_real() && den_.is_real(); }

    GaussianRational eval(long long k) const {
        GaussianRational d = den_.eval(k);
        if (d.is_zero()) throw PoleError(k);
        return num_.eval(k) / d;
    }
    bool defined_at(long long k) const { return !den_.eval(k).is_zero(); }

    // deg(den) - deg(num); +infinity sentinel for the zero function
    int decay_order() const {
        if (is_zero()) return kDecayInfinity;
        return den_.degree() - num_.degree();
    }

    // finite limit at n -> +infinity, or nullopt when it diverges
    std::optional<GaussianRational> limit_at_infinity() const {
        int d = decay_order();
        if (d == kDecayInfinity || d > 0) return GaussianRational(0);
        if (d < 0) return std::nullopt;
        return num_.leading() / den_.leading();
    }

    RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }

    // substitute n -> n + e
    RatFunc shifted(long long e) const {
        if (e == 0) return *this;
        return RatFunc(num_.shifted(e), den_.shifted(e));
    }

    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const GaussianRational& s, const RatFunc& f) {
        return RatFunc(s * f.num_, f.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ZeroDenominator();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str(const std::string& var = "n") const {
        std::string n = num_.str(var);
        if (den_ == Poly(GaussianRational(1))) return n;
        return "(" + n + ")/(" + den_.str(var) + ")";
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw ZeroDenominator();
        if (num_.is_zero()) {
            den_ = Poly(GaussianRational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        GaussianRational inv_lead = GaussianRational(1) / den_.leading();
        num_ = inv_lead * num_;
        den_ = inv_lead * den_;
    }

    Poly num_;
    Poly den_;
};

enum class RfOp { add, sub, mul, div };

inline RatFunc rf_arith(const RatFunc& f, const RatFunc& g, RfOp op) {
    switch (op) {
        case RfOp::add: return f + g;
        case RfOp::sub: return f - g;
        case RfOp::mul: return f * g;
        case RfOp::div: return f / g;
    }
    throw std::logic_error("unreachable");
}

}  // namespace vermaband
