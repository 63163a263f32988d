#pragma once

// The module weight h >= 1/2 with its derived parameters hbar = 2h-1 and
// q_R = 1/(2h-1), and the norm weights w^2_n = n! (2h)_n of the inner
// product that makes the module unitarizable (<e_0,e_0> = 1, L_{-1}^* = L_1).

#include "vermaband/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace vermaband {

class Weight {
public:
    explicit Weight(Rational h) : h_(std::move(h)) {
        if (h_ < Rational(1, 2)) throw std::domain_error("weight h must be >= 1/2, got " + to_string(h_));
    }
    static Weight parse(const std::string& text) { return Weight(parse_rational(text)); }

    const Rational& h() const { return h_; }
    Rational hbar() const { return 2 * h_ - 1; }
    bool at_limit_point() const { return hbar() == 0; }  // h = 1/2, q_R -> infinity
    Rational q_R() const {
        if (at_limit_point()) throw std::domain_error("q_R undefined at h = 1/2");
        return Rational(1) / hbar();
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.h_ == b.h_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

private:
    Rational h_;
};

class NormWeights {
public:
    explicit NormWeights(Weight w) : weight_(std::move(w)) { cache_.push_back(Rational(1)); }

    const Weight& weight() const { return weight_; }

    // w^2_n, exact; recurrence w^2_{n+1} = (n+1)(n+2h) w^2_n
    const Rational& squared(long long n) const {
        if (n < 0) throw std::domain_error("norm weight at negative level");
        while (static_cast<long long>(cache_.size()) <= n) {
            long long m = static_cast<long long>(cache_.size()) - 1;
            cache_.push_back(cache_.back() * Rational(m + 1) * (Rational(m) + 2 * weight_.h()));
        }
        return cache_[static_cast<size_t>(n)];
    }

    // w^2_r / w^2_c without materializing the factorially large values
    Rational squared_ratio(long long r, long long c) const {
        Rational acc(1);
        for (long long m = c; m < r; ++m) acc *= Rational(m + 1) * (Rational(m) + 2 * weight_.h());
        for (long long m = r; m < c; ++m) acc /= Rational(m + 1) * (Rational(m) + 2 * weight_.h());
        return acc;
    }

    // w^2_{n+d} / w^2_n as a rational function of n
    RatFunc ratio(long long d) const {
        Poly prod(GaussianRational(1));
        GaussianRational two_h{2 * weight_.h()};
        if (d >= 0) {
            for (long long i = 0; i < d; ++i) {
                prod = prod * Poly::linear(GaussianRational(Rational(i + 1)));
                prod = prod * Poly::linear(two_h + GaussianRational(Rational(i)));
            }
            return RatFunc(prod, Poly(GaussianRational(1)));
        }
        for (long long i = 1; i <= -d; ++i) {
            prod = prod * Poly::linear(GaussianRational(Rational(1 - i)));
            prod = prod * Poly::linear(two_h + GaussianRational(Rational(-i)));
        }
        return RatFunc(Poly(GaussianRational(1)), prod);
    }

private:
    Weight weight_;
    mutable std::vector<Rational> cache_;
};

}  // namespace vermaband
