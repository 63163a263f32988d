#pragma once

// Dense univariate polynomials in the level variable n over GaussianRational.
// Degrees stay small here (a band of shift degree k contributes O(|k|) linear
// factors), so the classical Euclidean algorithms are the right tool.

#include "vermaband/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vermaband {

class Poly {
public:
    Poly() = default;
    explicit Poly(GaussianRational c) {
        if (!c.is_zero()) coeff_.push_back(std::move(c));
    }
    // ascending degree
    explicit Poly(std::vector<GaussianRational> coeff) : coeff_(std::move(coeff)) { trim(); }

    static Poly variable() { return Poly(std::vector<GaussianRational>{0, 1}); }
    // (n + shift)
    static Poly linear(const GaussianRational& shift) {
        return Poly(std::vector<GaussianRational>{shift, 1});
    }

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
    const std::vector<GaussianRational>& coefficients() const { return coeff_; }
    const GaussianRational& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeff_.back();
    }
    GaussianRational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coeff_.size())) return GaussianRational(0);
        return coeff_[static_cast<size_t>(k)];
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc(0);
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    GaussianRational eval(long long k) const { return eval(GaussianRational(Rational(k))); }

    bool is_real() const {
        return std::all_of(coeff_.begin(), coeff_.end(), [](const auto& c) { return c.is_real(); });
    }

    Poly conj() const {
        std::vector<GaussianRational> c;
        c.reserve(coeff_.size());
        for (const auto& x : coeff_) c.push_back(x.conj());
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<GaussianRational> c;
        c.reserve(coeff_.size());
        for (const auto& x : coeff_) c.push_back(-x);
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<GaussianRational> c(std::max(a.coeff_.size(), b.coeff_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeff_.size()) c[i] += a.coeff_[i];
            if (i < b.coeff_.size()) c[i] += b.coeff_[i];
        }
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<GaussianRational> c(a.coeff_.size() + b.coeff_.size() - 1);
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            for (size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const GaussianRational& s, const Poly& p) {
        if (s.is_zero()) return Poly();
        std::vector<GaussianRational> c;
        c.reserve(p.coeff_.size());
        for (const auto& x : p.coeff_) c.push_back(s * x);
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient and remainder over the coefficient field
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = a;
        Poly quot;
        GaussianRational inv_lead = GaussianRational(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            GaussianRational factor = rem.leading() * inv_lead;
            std::vector<GaussianRational> term(static_cast<size_t>(shift) + 1);
            term.back() = factor;
            Poly t(std::move(term));
            quot = quot + t;
            rem = rem - t * b;
        }
        return {quot, rem};
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return (GaussianRational(1) / leading()) * (*this);
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r).monic();
        }
        return a.monic();
    }

    // substitute n -> n + e
    Poly shifted(long long e) const {
        Poly x_plus_e = Poly::linear(GaussianRational(Rational(e)));
        Poly acc;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x_plus_e + Poly(*it);
        return acc;
    }

    std::string str(const std::string& var = "n") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const auto& c = coeff_[static_cast<size_t>(k)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (k == 0) {
                out += c.str();
            } else {
                if (!(c == GaussianRational(1))) out += c.str() + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }

    std::vector<GaussianRational> coeff_;
};

namespace detail {

inline Int ipow(Int base, unsigned k) {
    Int r(1);
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

inline Int floor_kth_root(const Int& x, unsigned k) {
    if (x < 0) throw std::domain_error("floor_kth_root of negative");
    if (k == 0) throw std::domain_error("floor_kth_root with k=0");
    if (k == 1 || x <= 1) return x;
    Int lo(1), hi(2);
    while (ipow(hi, k) <= x) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// |a| <= |re| + |im| (upper), |a| >= max(|re|,|im|) (lower); rational and exact.
inline Rational abs_upper(const GaussianRational& a) {
    return abs_rational(a.re()) + abs_rational(a.im());
}
inline Rational abs_lower(const GaussianRational& a) {
    return std::max(abs_rational(a.re()), abs_rational(a.im()));
}

// Integer B such that every positive real root of p (real coefficients) and
// every root of p with positive real part (complex coefficients, via the
// Lagrange bound on moduli ratios) satisfies root <= B.  Exact arithmetic.
inline long long positive_root_bound(const Poly& p) {
    if (p.is_zero()) throw std::logic_error("root bound of zero polynomial");
    int d = p.degree();
    if (d == 0) return 0;
    Rational lead_lower = abs_lower(p.leading());
    long long bound = 0;
    for (int i = 0; i < d; ++i) {
        GaussianRational ai = p.coefficient(i);
        if (ai.is_zero()) continue;
        Rational ratio = abs_upper(ai) / lead_lower;
        // ceil(ratio)
        Int c = numerator(ratio) / denominator(ratio);
        if (c * denominator(ratio) != numerator(ratio)) c += 1;
        Int root = floor_kth_root(c < 0 ? Int(0) : c, static_cast<unsigned>(d - i)) + 1;
        Int cand = 2 * root;
        long long v = cand.convert_to<long long>();
        bound = std::max(bound, v);
    }
    return bound;
}

}  // namespace detail

}  // namespace vermaband
