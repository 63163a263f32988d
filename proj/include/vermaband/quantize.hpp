#pragma once

// Symbols on the circle (Laurent polynomials), their quantization
// z^k -> F^k, z^{-k} -> D^k, the lift of vector fields through the L_k
// family, and the product/derivation defects measured modulo hbar and
// modulo Hilbert-Schmidt.

#include "vermaband/conformal.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace vermaband {

// finite Fourier support: f(z) = sum c_k z^k on |z| = 1
class Symbol {
public:
    using Coeffs = std::map<long long, GaussianRational>;

    Symbol() = default;
    explicit Symbol(Coeffs c) : c_(std::move(c)) { prune(); }
    static Symbol monomial(long long k, GaussianRational c = GaussianRational(1)) {
        Coeffs m;
        m.emplace(k, std::move(c));
        return Symbol(std::move(m));
    }
    static Symbol one() { return monomial(0); }

    const Coeffs& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    GaussianRational coefficient(long long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? GaussianRational(0) : it->second;
    }

    // conj(f)(z) = sum conj(c_{-k}) z^k on the unit circle
    Symbol conj() const {
        Coeffs out;
        for (const auto& [k, c] : c_) out.emplace(-k, c.conj());
        return Symbol(std::move(out));
    }

    friend Symbol operator+(const Symbol& a, const Symbol& b) {
        Coeffs out = a.c_;
        for (const auto& [k, c] : b.c_) out[k] += c;
        return Symbol(std::move(out));
    }
    friend Symbol operator-(const Symbol& a, const Symbol& b) { return a + (GaussianRational(-1) * b); }
    friend Symbol operator*(const GaussianRational& s, const Symbol& f) {
        Coeffs out;
        for (const auto& [k, c] : f.c_) out.emplace(k, s * c);
        return Symbol(std::move(out));
    }
    friend Symbol operator*(const Symbol& a, const Symbol& b) {
        Coeffs out;
        for (const auto& [k, c] : a.c_)
            for (const auto& [l, d] : b.c_) out[k + l] += c * d;
        return Symbol(std::move(out));
    }
    friend bool operator==(const Symbol& a, const Symbol& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }

private:
    void prune() {
        for (auto it = c_.begin(); it != c_.end();)
            it = it->second.is_zero() ? c_.erase(it) : std::next(it);
    }
    Coeffs c_;
};

// vector field sum a_k l_k with l_k = z^{1-k} d/dz, so l_k z^m = m z^{m-k};
// this index convention makes k -> l_k a Lie isomorphism onto the Witt
// bracket and is forced by the exact lift identities.
class VField {
public:
    using Coeffs = std::map<long long, GaussianRational>;

    VField() = default;
    explicit VField(Coeffs a) : a_(std::move(a)) { prune(); }
    static VField generator(long long k, GaussianRational c = GaussianRational(1)) {
        Coeffs m;
        m.emplace(k, std::move(c));
        return VField(std::move(m));
    }

    const Coeffs& coefficients() const { return a_; }

    // l_v f, symbolically on Laurent polynomials
    Symbol apply(const Symbol& f) const {
        Symbol::Coeffs out;
        for (const auto& [k, a] : a_)
            for (const auto& [m, c] : f.coefficients()) out[m - k] += a * c * GaussianRational(Rational(m));
        return Symbol(std::move(out));
    }

private:
    void prune() {
        for (auto it = a_.begin(); it != a_.end();)
            it = it->second.is_zero() ? a_.erase(it) : std::next(it);
    }
    Coeffs a_;
};

// Op(f) = sum_{k>=0} c_k F^k + sum_{k<0} c_k D^{-k}
inline BandOperator op_quantize(const Symbol& f, const Weight& w) {
    BandOperator D = gen_D(w);
    BandOperator F = gen_F(w);
    BandOperator acc = BandOperator::zero(w);
    for (const auto& [k, c] : f.coefficients()) {
        BandOperator term = BandOperator::identity(w);
        for (long long i = 0; i < std::llabs(k); ++i) term = term * (k >= 0 ? F : D);
        acc = acc + c * term;
    }
    return acc;
}

inline BandOperator lift_vfield(const VField& v, const Weight& w) {
    BandOperator acc = BandOperator::zero(w);
    for (const auto& [k, a] : v.coefficients()) acc = acc + a * gen_L(k, w);
    return acc;
}

struct QuantizeDefect {
    BandOperator defect;
    DefectReport report;
};

// Op(f) Op(g) - Op(f g)
inline QuantizeDefect product_defect(const Symbol& f, const Symbol& g, const Weight& w,
                                     long long N = 64) {
    BandOperator delta = op_quantize(f, w) * op_quantize(g, w) - op_quantize(f * g, w);
    DefectReport rep = hs_report(delta, N);
    return {std::move(delta), std::move(rep)};
}

// [L_v, Op(f)] - Op(l_v f)
inline QuantizeDefect derivation_defect(const VField& v, const Symbol& f, const Weight& w,
                                        long long N = 64) {
    BandOperator delta =
        commutator(lift_vfield(v, w), op_quantize(f, w)) - op_quantize(v.apply(f), w);
    DefectReport rep = hs_report(delta, N);
    return {std::move(delta), std::move(rep)};
}

enum class ScalingProbe { product, derivation };

struct ScalingPoint {
    Rational h;
    Rational hbar;
    double norm = 0.0;  // HS norm of the defect with its finite-rank part removed
};

struct ScalingResult {
    std::vector<ScalingPoint> table;
    std::optional<double> slope;  // least-squares slope of log(norm) vs log(hbar)
    bool exact_zero = false;      // every sampled defect had no band part at all
};

struct ScalingArgs {
    Symbol f;
    Symbol g;   // product probe
    VField v;   // derivation probe
};

inline ScalingResult hbar_scaling(ScalingProbe probe, const ScalingArgs& args,
                                  const std::vector<Rational>& weights, long long N = 2000) {
    if (weights.size() < 4) throw std::invalid_argument("hbar_scaling needs at least 4 weights");
    ScalingResult out;
    bool all_empty = true;
    for (const auto& h : weights) {
        Weight w(h);
        if (w.at_limit_point()) throw std::invalid_argument("hbar_scaling weights must exceed 1/2");
        BandOperator delta = probe == ScalingProbe::product
                                 ? product_defect(args.f, args.g, w, 2).defect
                                 : derivation_defect(args.v, args.f, w, 2).defect;
        // strip the finite-rank (hbar-independent) part before measuring
        BandOperator band_part = delta - BandOperator::make(w, {}, delta.corrections());
        ScalingPoint pt;
        pt.h = h;
        pt.hbar = w.hbar();
        if (band_part.is_zero()) {
            pt.norm = 0.0;
        } else {
            all_empty = false;
            pt.norm = hs_report(band_part, N).hs_norm();
        }
        out.table.push_back(std::move(pt));
    }
    if (all_empty) {
        out.exact_zero = true;
        return out;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long cnt = 0;
    for (const auto& pt : out.table) {
        if (pt.norm <= 0.0) continue;
        double x = std::log(to_double(pt.hbar));
        double y = std::log(pt.norm);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2) out.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    return out;
}

}  // namespace vermaband
