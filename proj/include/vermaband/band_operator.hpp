#pragma once

// Band operators on the lowest-weight module: a finite set of shift bands
// e_n -> phi_d(n) e_{n+d} with rational-function coefficients, plus a
// finite-rank correction table in the monomial basis.
//
// Composition multiplies the shifted band coefficients as exact rational
// functions and then repairs the finitely many columns where a lowering band
// passes through a nonexistent negative index: the rational product keeps a
// spurious value there (pole/zero cancellation), and the true operator entry
// is zero, so the difference lands in the correction table.  This is where
// the finite-rank pieces of the algebra (projector defects, Toeplitz index
// terms) come from.

#include "vermaband/weight.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vermaband {

struct GuardViolation : std::invalid_argument {
    GuardViolation(long long d, long long k)
        : std::invalid_argument("guard violation: band d=" + std::to_string(d) + " has phi(" +
                                std::to_string(k) + ") != 0"),
          degree(d),
          index(k) {}
    long long degree;
    long long index;
};

struct PoleInDomain : std::invalid_argument {
    PoleInDomain(long long d, long long k)
        : std::invalid_argument("pole in domain: band d=" + std::to_string(d) +
                                " undefined at n=" + std::to_string(k)),
          degree(d),
          index(k) {}
    long long degree;
    long long index;
};

struct WeightMismatch : std::invalid_argument {
    WeightMismatch() : std::invalid_argument("operands live over different weights") {}
};

namespace detail {

// smallest horizon H such that den has no integer roots in (H, infinity);
// den's integer roots are roots of any nonzero coefficient-component poly
inline long long denominator_root_horizon(const Poly& den) {
    std::vector<GaussianRational> re, im;
    for (const auto& c : den.coefficients()) {
        re.emplace_back(c.re());
        im.emplace_back(c.im());
    }
    Poly re_part{std::move(re)}, im_part{std::move(im)};
    long long bound = std::numeric_limits<long long>::max();
    if (!re_part.is_zero()) bound = std::min(bound, positive_root_bound(re_part));
    if (!im_part.is_zero()) bound = std::min(bound, positive_root_bound(im_part));
    return bound;
}

inline void check_pole_free_from(const RatFunc& f, long long floor, long long band) {
    long long horizon = denominator_root_horizon(f.den());
    for (long long k = floor; k <= horizon; ++k)
        if (!f.defined_at(k)) throw PoleInDomain(band, k);
}

}  // namespace detail

class BandOperator {
public:
    using BandMap = std::map<long long, RatFunc>;
    using CorrectionMap = std::map<std::pair<long long, long long>, GaussianRational>;

    // Validated public constructor: every lowering band must vanish on the
    // indices it would shift below the module floor, and no band denominator
    // may vanish on the band's domain.
    static BandOperator make(Weight weight, BandMap bands, CorrectionMap corrections = {}) {
        for (const auto& [d, phi] : bands) {
            detail::check_pole_free_from(phi, std::max<long long>(0, -d), d);
            for (long long k = 0; k < -d; ++k) {
                if (!phi.defined_at(k)) throw PoleInDomain(d, k);
                if (!phi.eval(k).is_zero()) throw GuardViolation(d, k);
            }
        }
        for (const auto& [pos, x] : corrections) {
            (void)x;
            if (pos.first < 0 || pos.second < 0)
                throw std::invalid_argument("correction index out of range");
        }
        return BandOperator(std::move(weight), std::move(bands), std::move(corrections));
    }

    static BandOperator zero(Weight weight) { return BandOperator(std::move(weight), {}, {}); }

    static BandOperator identity(Weight weight) {
        BandMap b;
        b.emplace(0, RatFunc(1));
        return BandOperator(std::move(weight), std::move(b), {});
    }

    static BandOperator projector(Weight weight, long long k) {
        if (k < 0) throw std::invalid_argument("projector index must be >= 0");
        CorrectionMap c;
        c.emplace(std::make_pair(k, k), GaussianRational(1));
        return BandOperator(std::move(weight), {}, std::move(c));
    }

    const Weight& weight() const { return weight_; }
    const BandMap& bands() const { return bands_; }
    const CorrectionMap& corrections() const { return corrections_; }
    bool is_zero() const { return bands_.empty() && corrections_.empty(); }

    // exact matrix entry at (row, col), both >= 0
    GaussianRational entry(long long row, long long col) const {
        GaussianRational v(0);
        auto it = bands_.find(row - col);
        if (it != bands_.end() && col >= -it->first) v = it->second.eval(col);
        auto jt = corrections_.find({row, col});
        if (jt != corrections_.end()) v += jt->second;
        return v;
    }

    // exact image of e_n, sorted by index, zeros dropped
    std::vector<std::pair<long long, GaussianRational>> apply(long long n) const {
        if (n < 0) throw std::invalid_argument("apply at negative level");
        std::map<long long, GaussianRational> out;
        for (const auto& [d, phi] : bands_)
            if (n + d >= 0) out[n + d] += phi.eval(n);
        for (const auto& [pos, x] : corrections_)
            if (pos.second == n) out[pos.first] += x;
        std::vector<std::pair<long long, GaussianRational>> result;
        for (auto& [idx, v] : out)
            if (!v.is_zero()) result.emplace_back(idx, std::move(v));
        return result;
    }

    BandOperator operator-() const { return scaled(GaussianRational(Rational(-1))); }

    BandOperator scaled(const GaussianRational& s) const {
        if (s.is_zero()) return zero(weight_);
        BandMap b;
        for (const auto& [d, phi] : bands_) b.emplace(d, s * phi);
        CorrectionMap c;
        for (const auto& [pos, x] : corrections_) c.emplace(pos, s * x);
        return BandOperator(weight_, std::move(b), std::move(c));
    }

    friend BandOperator operator+(const BandOperator& a, const BandOperator& b) {
        a.require_same_weight(b);
        BandMap bands = a.bands_;
        for (const auto& [d, phi] : b.bands_) {
            auto [it, inserted] = bands.emplace(d, phi);
            if (!inserted) it->second = it->second + phi;
        }
        CorrectionMap corr = a.corrections_;
        for (const auto& [pos, x] : b.corrections_) corr[pos] += x;
        return BandOperator(a.weight_, std::move(bands), std::move(corr));
    }

    friend BandOperator operator-(const BandOperator& a, const BandOperator& b) { return a + (-b); }

    friend BandOperator operator*(const GaussianRational& s, const BandOperator& a) {
        return a.scaled(s);
    }

    // operator composition A(B(.))
    friend BandOperator operator*(const BandOperator& a, const BandOperator& b) {
        a.require_same_weight(b);
        BandMap bands;
        CorrectionMap corr;
        // band x band: exact rational product per pair, then subtract the
        // spurious values the rational form keeps on columns whose
        // intermediate index c+e would be negative (the true term is absent
        // there because the lowering band annihilates those basis vectors)
        for (const auto& [d, fa] : a.bands_) {
            for (const auto& [e, fb] : b.bands_) {
                RatFunc pair = fa.shifted(e) * fb;
                if (pair.is_zero()) continue;
                long long f = d + e;
                auto [it, inserted] = bands.emplace(f, pair);
                if (!inserted) it->second = it->second + pair;
                for (long long c = 0; c < -e; ++c) {
                    if (c + f < 0) continue;  // row below the floor: entry does not exist
                    if (!pair.defined_at(c)) throw PoleInDomain(f, c);
                    GaussianRational v = pair.eval(c);
                    if (!v.is_zero()) corr[{c + f, c}] -= v;
                }
            }
        }
        // band x correction and correction x band
        for (const auto& [pos, x] : b.corrections_) {
            auto [r, c] = pos;
            for (const auto& [d, fa] : a.bands_) {
                if (r + d < 0) continue;
                GaussianRational v = fa.eval(r) * x;
                if (!v.is_zero()) corr[{r + d, c}] += v;
            }
        }
        for (const auto& [pos, x] : a.corrections_) {
            auto [r, c] = pos;
            for (const auto& [e, fb] : b.bands_) {
                long long col = c - e;
                if (col < 0) continue;
                GaussianRational v = x * fb.eval(col);
                if (!v.is_zero()) corr[{r, col}] += v;
            }
        }
        // correction x correction
        for (const auto& [pa, x] : a.corrections_)
            for (const auto& [pb, y] : b.corrections_)
                if (pa.second == pb.first) corr[{pa.first, pb.second}] += x * y;
        // composed bands must stay pole-free on their own domain
        for (const auto& [f, phi] : bands)
            if (!phi.is_zero())
                detail::check_pole_free_from(phi, std::max<long long>(0, -f), f);
        return BandOperator(a.weight_, std::move(bands), std::move(corr));
    }

    BandOperator adjoint() const {
        NormWeights nw(weight_);
        BandMap bands;
        for (const auto& [d, phi] : bands_) {
            RatFunc psi = phi.conj().shifted(-d) * nw.ratio(d).shifted(-d);
            detail::check_pole_free_from(psi, std::max<long long>(0, d), -d);
            if (!psi.is_zero()) bands.emplace(-d, psi);
        }
        CorrectionMap corr;
        for (const auto& [pos, x] : corrections_) {
            auto [r, c] = pos;
            GaussianRational y = x.conj() * GaussianRational(nw.squared_ratio(r, c));
            if (!y.is_zero()) corr[{c, r}] += y;
        }
        return BandOperator(weight_, std::move(bands), std::move(corr));
    }

    // exact dense truncation in the monomial basis; entry (r,c) of A e_c
    std::vector<std::vector<GaussianRational>> truncate_monomial(int N) const {
        if (N < 1) throw std::invalid_argument("truncation size must be >= 1");
        std::vector<std::vector<GaussianRational>> m(static_cast<size_t>(N),
                                                     std::vector<GaussianRational>(static_cast<size_t>(N)));
        for (long long c = 0; c < N; ++c)
            for (const auto& [d, phi] : bands_) {
                long long r = c + d;
                if (r >= 0 && r < N) m[static_cast<size_t>(r)][static_cast<size_t>(c)] += phi.eval(c);
            }
        for (const auto& [pos, x] : corrections_)
            if (pos.first < N && pos.second < N)
                m[static_cast<size_t>(pos.first)][static_cast<size_t>(pos.second)] += x;
        return m;
    }

    // floating truncation in the orthonormal basis u_n = e_n / w_n
    std::vector<std::vector<std::complex<double>>> truncate_orthonormal(int N) const {
        if (N < 1) throw std::invalid_argument("truncation size must be >= 1");
        NormWeights nw(weight_);
        std::vector<std::vector<std::complex<double>>> m(
            static_cast<size_t>(N), std::vector<std::complex<double>>(static_cast<size_t>(N)));
        auto mono = truncate_monomial(N);
        for (long long r = 0; r < N; ++r)
            for (long long c = 0; c < N; ++c) {
                const auto& v = mono[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (v.is_zero()) continue;
                double scale = std::sqrt(to_double(nw.squared_ratio(r, c)));
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] = v.to_complex() * scale;
            }
        return m;
    }

    friend bool operator==(const BandOperator& a, const BandOperator& b) {
        return a.weight_ == b.weight_ && a.bands_ == b.bands_ && a.corrections_ == b.corrections_;
    }
    friend bool operator!=(const BandOperator& a, const BandOperator& b) { return !(a == b); }

private:
    BandOperator(Weight weight, BandMap bands, CorrectionMap corrections)
        : weight_(std::move(weight)), bands_(std::move(bands)), corrections_(std::move(corrections)) {
        prune();
    }

    void require_same_weight(const BandOperator& o) const {
        if (weight_ != o.weight_) throw WeightMismatch();
    }

    void prune() {
        for (auto it = bands_.begin(); it != bands_.end();)
            it = it->second.is_zero() ? bands_.erase(it) : std::next(it);
        for (auto it = corrections_.begin(); it != corrections_.end();)
            it = it->second.is_zero() ? corrections_.erase(it) : std::next(it);
    }

    Weight weight_;
    BandMap bands_;
    CorrectionMap corrections_;
};

inline BandOperator commutator(const BandOperator& a, const BandOperator& b) {
    return a * b - b * a;
}

}  // namespace vermaband
