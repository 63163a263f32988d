#pragma once

// Shared test fixtures: independent oracles (symbolic differentiation on
// monomials, sparse exact truncation products, Gram-matrix pairings) and
// seeded random generators.  Everything here stays independent of the band
// composition / adjoint code paths it is used to check.

#include "vermaband/vermaband.hpp"

#include <map>
#include <random>
#include <vector>

namespace testutil {

using namespace vermaband;

inline Rational rat(const std::string& s) { return parse_rational(s); }
inline GaussianRational grat(long long num, long long den) {
    return GaussianRational(Rational(num, den));
}

inline RatFunc rf_const(long long num, long long den = 1) {
    return RatFunc(GaussianRational(Rational(num, den)));
}

// product of linear factors (n + a_i/b_i)
inline Poly linear_product(const std::vector<Rational>& shifts) {
    Poly p{GaussianRational(1)};
    for (const auto& s : shifts) p = p * Poly::linear(GaussianRational(s));
    return p;
}

// ---- symbolic differential-operator oracle on monomials -------------------
// Image of e_n under z^{mul_power} o r(xi) o d^{deriv_order}, where r is an
// exact rational function of xi evaluated at the level the resolvent sees.
struct MonomialTerm {
    long long index;
    GaussianRational value;
};

inline MonomialTerm diffop_apply(long long n, long long deriv_order, const RatFunc& r_of_xi,
                                 long long mul_power) {
    GaussianRational coeff(1);
    long long level = n;
    for (long long i = 0; i < deriv_order; ++i) {
        coeff *= GaussianRational(Rational(level));
        --level;
    }
    if (level < 0 || coeff.is_zero()) return {0, GaussianRational(0)};
    coeff *= r_of_xi.eval(level);
    return {level + mul_power, coeff};
}

// ---- sparse exact truncation products --------------------------------------
// column-major: sparse[c] maps row -> value
using SparseMat = std::vector<std::map<long long, GaussianRational>>;

inline SparseMat to_sparse(const BandOperator& op, int N) {
    auto dense = op.truncate_monomial(N);
    SparseMat s(static_cast<size_t>(N));
    for (long long r = 0; r < N; ++r)
        for (long long c = 0; c < N; ++c)
            if (!dense[r][c].is_zero()) s[static_cast<size_t>(c)][r] = dense[r][c];
    return s;
}

inline SparseMat sparse_mul(const SparseMat& a, const SparseMat& b) {
    SparseMat out(b.size());
    for (size_t c = 0; c < b.size(); ++c)
        for (const auto& [j, v] : b[c]) {
            if (j < 0 || static_cast<size_t>(j) >= a.size()) continue;
            for (const auto& [r, u] : a[static_cast<size_t>(j)]) {
                auto& cell = out[c][r];
                cell += u * v;
                if (cell.is_zero()) out[c].erase(r);
            }
        }
    return out;
}

inline bool sparse_window_equal(const SparseMat& a, const SparseMat& b, long long window) {
    auto crop = [&](const SparseMat& m) {
        std::map<std::pair<long long, long long>, GaussianRational> cells;
        for (size_t c = 0; c < m.size() && static_cast<long long>(c) < window; ++c)
            for (const auto& [r, v] : m[c])
                if (r < window && !v.is_zero()) cells[{r, static_cast<long long>(c)}] = v;
        return cells;
    };
    return crop(a) == crop(b);
}

// ---- Gram pairing ----------------------------------------------------------
// <A e_n, e_m> = <e_n, B e_m> for all n, m <= M, with <x, y> linear in the
// first slot and w^2_n = n! (2h)_n on the diagonal.
inline bool gram_adjoint_pair(const BandOperator& a, const BandOperator& b, long long M) {
    NormWeights nw(a.weight());
    for (long long n = 0; n <= M; ++n)
        for (long long m = 0; m <= M; ++m) {
            GaussianRational lhs = a.entry(m, n) * GaussianRational(nw.squared(m));
            GaussianRational rhs = b.entry(n, m).conj() * GaussianRational(nw.squared(n));
            if (lhs != rhs) return false;
        }
    return true;
}

// ---- seeded random data -----------------------------------------------------
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    long long pick(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }
};

inline GaussianRational random_gaussian(Rng& rng, long long span = 4) {
    Rational re(rng.pick(-span, span), rng.pick(1, 3));
    Rational im = rng.pick(0, 3) == 0 ? Rational(rng.pick(-span, span), rng.pick(1, 3)) : Rational(0);
    return GaussianRational(re, im);
}

inline Poly random_poly(Rng& rng, int max_degree, bool nonzero) {
    for (;;) {
        std::vector<GaussianRational> c;
        int deg = static_cast<int>(rng.pick(0, max_degree));
        for (int i = 0; i <= deg; ++i)
            c.push_back(rng.pick(0, 2) == 0 ? GaussianRational(0) : random_gaussian(rng));
        Poly p{std::move(c)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(Rng& rng, int max_degree = 3) {
    return RatFunc(random_poly(rng, max_degree, false), random_poly(rng, max_degree, true));
}

inline Symbol random_symbol(Rng& rng, long long support, long long max_terms = 4) {
    Symbol::Coeffs c;
    long long terms = rng.pick(1, max_terms);
    for (long long t = 0; t < terms; ++t) c[rng.pick(-support, support)] += random_gaussian(rng);
    return Symbol(std::move(c));
}

// random word over {D, F, L_k (|k|<=3), P0, I}; returns factors plus the
// margin the truncation-product oracle must discard
struct RandomWord {
    std::vector<BandOperator> factors;
    long long margin = 0;
};

inline RandomWord random_word(Rng& rng, const Weight& w, long long max_len = 4) {
    RandomWord word;
    long long len = rng.pick(1, max_len);
    for (long long i = 0; i < len; ++i) {
        switch (rng.pick(0, 4)) {
            case 0:
                word.factors.push_back(gen_D(w));
                word.margin += 1;
                break;
            case 1:
                word.factors.push_back(gen_F(w));
                word.margin += 1;
                break;
            case 2: {
                long long k = rng.pick(-3, 3);
                word.factors.push_back(gen_L(k, w));
                word.margin += std::llabs(k);
                break;
            }
            case 3:
                word.factors.push_back(BandOperator::projector(w, 0));
                break;
            default:
                word.factors.push_back(BandOperator::identity(w));
                break;
        }
    }
    return word;
}

}  // namespace testutil
