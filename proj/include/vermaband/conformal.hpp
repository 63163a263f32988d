#pragma once

// The full generator family L_k, k in Z, acting on the weight-h module, and
// the quantitative analysis of how far [L_m, L_n] falls short of the Witt
// relation (m-n) L_{m+n}.  The defect is a single band of degree -(m+n)
// plus finite-rank corrections; its decay decides Hilbert-Schmidt
// membership symbolically.

#include "vermaband/berezin.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace vermaband {

inline constexpr long long kGeneratorCap = 16;

struct GeneratorCapExceeded : std::invalid_argument {
    explicit GeneratorCapExceeded(long long k)
        : std::invalid_argument("generator index " + std::to_string(k) + " exceeds cap " +
                                std::to_string(kGeneratorCap)) {}
};

// k >= 0: L_k = (xi + (k+1)h) d^k      -> band{-k: (n-k+(k+1)h) n(n-1)...(n-k+1)}
// k < 0:  L_k = z^{|k|} (xi + (|k|+1)h) / ((xi+2h)...(xi+2h+|k|-1))
//                                       -> band{+|k|: (n+(|k|+1)h)/prod}
// The resolvent acts before the multiplication by z^{|k|}, matching the
// operator order fixed for F.
inline BandOperator gen_L(long long k, const Weight& w) {
    if (k > kGeneratorCap || k < -kGeneratorCap) throw GeneratorCapExceeded(k);
    GaussianRational h{w.h()};
    GaussianRational two_h{2 * w.h()};
    if (k >= 0) {
        Poly num = Poly::linear(GaussianRational(Rational(k + 1)) * h - GaussianRational(Rational(k)));
        for (long long i = 0; i < k; ++i)
            num = num * Poly::linear(GaussianRational(Rational(-i)));
        return BandOperator::make(w, {{-k, RatFunc(num, Poly(GaussianRational(1)))}});
    }
    long long j = -k;
    Poly num = Poly::linear(GaussianRational(Rational(j + 1)) * h);
    Poly den(GaussianRational(1));
    for (long long i = 0; i < j; ++i) den = den * Poly::linear(two_h + GaussianRational(Rational(i)));
    return BandOperator::make(w, {{j, RatFunc(num, den)}});
}

struct WittDefect {
    long long m = 0;
    long long n = 0;
    BandOperator defect;  // [L_m, L_n] - (m-n) L_{m+n}
    DefectReport report;
};

inline WittDefect witt_defect(long long m, long long n, const Weight& w, long long N = 64) {
    BandOperator lm = gen_L(m, w);
    BandOperator ln = gen_L(n, w);
    BandOperator target = GaussianRational(Rational(m - n)) * gen_L(m + n, w);
    BandOperator delta = commutator(lm, ln) - target;
    DefectReport rep = hs_report(delta, N);
    return {m, n, std::move(delta), std::move(rep)};
}

struct CheckItem {
    std::string name;
    bool pass = false;
};

// Exact regression net over the generator family: the closed sl(2) bracket
// relations, the grading, adjoints, and consistency with gen_sl2.
inline std::vector<CheckItem> exact_identity_suite(const Weight& w) {
    std::vector<CheckItem> out;
    auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
    Sl2Triple sl2 = gen_sl2(w);
    BandOperator l1 = gen_L(1, w), lm1 = gen_L(-1, w), l0 = gen_L(0, w);
    add("[L1,L-1] = 2 L0", commutator(l1, lm1) == GaussianRational(2) * l0);
    add("[L2,L-1] = 3 L1", commutator(gen_L(2, w), lm1) == GaussianRational(3) * l1);
    add("[L1,L2] = -L3", commutator(l1, gen_L(2, w)) == -gen_L(3, w));
    for (long long k = -5; k <= 5; ++k)
        add("[L0,L" + std::to_string(k) + "] = " + std::to_string(-k) + " L" + std::to_string(k),
            commutator(l0, gen_L(k, w)) == GaussianRational(Rational(-k)) * gen_L(k, w));
    for (long long k = 1; k <= 5; ++k)
        add("adj(L" + std::to_string(k) + ") = L" + std::to_string(-k),
            gen_L(k, w).adjoint() == gen_L(-k, w));
    add("gen_L(-1) = z", lm1 == sl2.lower);
    add("gen_L(0) = xi + h", l0 == sl2.cartan);
    add("gen_L(1) = sl2 raising", l1 == sl2.raise);
    add("adj(D) = F", gen_D(w).adjoint() == gen_F(w));
    return out;
}

struct SweepRow {
    Rational h;
    Rational hbar;
    long long m = 0;
    long long n = 0;
    double hs_norm = 0.0;
    int min_decay_order = kDecayInfinity;
    std::string asymptotic_scalar;
    double finite_rank_norm = 0.0;
};

inline std::string asymptotic_to_string(const DefectReport& rep) {
    if (rep.diagonal_diverges) return "diverges";
    return rep.asymptotic_diagonal.str();
}

inline std::vector<SweepRow> defect_sweep(std::vector<std::pair<long long, long long>> pairs,
                                          std::vector<Rational> weights, long long N = 64) {
    if (pairs.empty() || weights.empty())
        throw std::invalid_argument("defect_sweep needs nonempty pairs and weights");
    std::sort(weights.begin(), weights.end());
    std::sort(pairs.begin(), pairs.end());
    std::vector<SweepRow> rows;
    for (const auto& h : weights) {
        Weight w(h);
        for (const auto& [m, n] : pairs) {
            WittDefect d = witt_defect(m, n, w, N);
            SweepRow row;
            row.h = h;
            row.hbar = w.hbar();
            row.m = m;
            row.n = n;
            row.hs_norm = d.report.hs_norm();
            row.min_decay_order = d.report.min_decay_order;
            row.asymptotic_scalar = asymptotic_to_string(d.report);
            row.finite_rank_norm = std::sqrt(to_double(d.report.finite_rank_norm_sq));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace vermaband
