#pragma once

// Generators t = D, t* = F of the hyperbolic-plane quantization algebra on
// the weight-h module, exact verification of the defining relations
// [DF,FD] = 0 and hbar*[D,F] = (1-DF)(1-FD), the Toeplitz degeneration at
// h = 1/2, and boundedness certificates.

#include "vermaband/defect.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vermaband {

// F multiplies by z after applying the resolvent (xi + 2h)^{-1}; the other
// operator order fails the commutation relation and is kept around as the
// discriminating variant.
enum class FOrdering { resolvent_first, resolvent_last };

inline BandOperator gen_D(const Weight& w) {
    return BandOperator::make(w, {{-1, RatFunc::n()}});
}

inline BandOperator gen_F(const Weight& w, FOrdering order = FOrdering::resolvent_first) {
    GaussianRational two_h{2 * w.h()};
    Poly den = order == FOrdering::resolvent_first
                   ? Poly::linear(two_h)
                   : Poly::linear(two_h + GaussianRational(1));
    return BandOperator::make(w, {{+1, RatFunc(Poly(GaussianRational(1)), den)}});
}

struct Sl2Triple {
    BandOperator lower;  // L_{-1} = z
    BandOperator cartan; // L_0 = xi + h
    BandOperator raise;  // L_1, lowering on levels
};

inline Sl2Triple gen_sl2(const Weight& w) {
    GaussianRational h{w.h()};
    GaussianRational two_h{2 * w.h()};
    BandOperator lm1 = BandOperator::make(w, {{+1, RatFunc(1)}});
    BandOperator l0 =
        BandOperator::make(w, {{0, RatFunc(Poly::linear(h), Poly(GaussianRational(1)))}});
    Poly l1_num = Poly::variable() * Poly::linear(two_h - GaussianRational(1));
    BandOperator l1 = BandOperator::make(w, {{-1, RatFunc(l1_num, Poly(GaussianRational(1)))}});
    return {std::move(lm1), std::move(l0), std::move(l1)};
}

struct RelationCheck {
    bool pass = true;
    // first differing band on failure
    std::optional<long long> residual_degree;
    std::optional<RatFunc> residual;
    std::string note;
};

namespace detail {

inline RelationCheck compare_operators(const BandOperator& lhs, const BandOperator& rhs,
                                       const std::string& name) {
    RelationCheck r;
    r.note = name;
    if (lhs == rhs) return r;
    r.pass = false;
    BandOperator diff = lhs - rhs;
    if (!diff.bands().empty()) {
        const auto& [d, phi] = *diff.bands().begin();
        r.residual_degree = d;
        r.residual = phi;
    } else if (!diff.corrections().empty()) {
        const auto& [pos, x] = *diff.corrections().begin();
        r.residual_degree = pos.first - pos.second;
        r.residual = RatFunc(x);
    }
    return r;
}

}  // namespace detail

// (i) [DF, FD] = 0 and (ii) hbar*[D,F] = (1-DF)(1-FD).  Form (ii) is the
// q_R-relation multiplied through by hbar, so it stays well-posed at the
// limit point h = 1/2 where q_R blows up.
inline std::vector<RelationCheck> check_berezin_relations(
    const Weight& w, FOrdering order = FOrdering::resolvent_first) {
    BandOperator D = gen_D(w);
    BandOperator F = gen_F(w, order);
    BandOperator I = BandOperator::identity(w);
    BandOperator DF = D * F;
    BandOperator FD = F * D;
    std::vector<RelationCheck> out;
    out.push_back(detail::compare_operators(commutator(DF, FD), BandOperator::zero(w),
                                            "[DF,FD] = 0"));
    BandOperator lhs = GaussianRational(w.hbar()) * commutator(D, F);
    BandOperator rhs = (I - DF) * (I - FD);
    out.push_back(detail::compare_operators(lhs, rhs, "hbar*[D,F] = (1-DF)(1-FD)"));
    return out;
}

// The rescaled form [s,s*] = (1 - q_R s s*)(1 - q_R s* s) with
// s = q_R^{-1/2} t.  No square root is ever materialized: s s* = q_R^{-1} DF
// and s* s = q_R^{-1} FD are exact, and the commutator [s,s*] equals
// q_R^{-1} [D,F].  Undefined at h = 1/2.
inline RelationCheck check_s_form(const Weight& w) {
    GaussianRational qr{w.q_R()};  // throws at the limit point
    BandOperator D = gen_D(w);
    BandOperator F = gen_F(w);
    BandOperator I = BandOperator::identity(w);
    GaussianRational inv_qr = GaussianRational(1) / qr;
    BandOperator ss_star = inv_qr * (D * F);
    BandOperator s_star_s = inv_qr * (F * D);
    BandOperator lhs = inv_qr * commutator(D, F);
    BandOperator rhs = (I - qr * ss_star) * (I - qr * s_star_s);
    return detail::compare_operators(lhs, rhs, "[s,s*] = (1-q_R s s*)(1-q_R s* s)");
}

// At h = 1/2 the algebra degenerates onto the circle: DF = I exactly while
// FD = I - P_0, so t* inverts t only modulo the rank-one defect.
inline std::vector<RelationCheck> toeplitz_limit_check(const Weight& w) {
    if (!w.at_limit_point()) throw WeightMismatch();
    BandOperator D = gen_D(w);
    BandOperator F = gen_F(w);
    BandOperator I = BandOperator::identity(w);
    BandOperator P0 = BandOperator::projector(w, 0);
    std::vector<RelationCheck> out;
    out.push_back(detail::compare_operators(D * F, I, "DF = I"));
    out.push_back(detail::compare_operators(F * D, I - P0, "FD = I - P0"));
    return out;
}

struct BoundednessRow {
    std::string name;
    std::optional<double> bound;  // nullopt = unbounded
};

inline std::vector<BoundednessRow> boundedness_report(const Weight& w, long long scan = 256) {
    BandOperator D = gen_D(w);
    BandOperator F = gen_F(w);
    std::vector<BoundednessRow> rows;
    rows.push_back({"D", op_norm_bound(D, scan)});
    rows.push_back({"F", op_norm_bound(F, scan)});
    rows.push_back({"DF", op_norm_bound(D * F, scan)});
    rows.push_back({"FD", op_norm_bound(F * D, scan)});
    return rows;
}

}  // namespace vermaband
