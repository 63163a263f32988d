#pragma once

// Named verification suites behind `verify --suite ...`.  Every check is
// deterministic; witnesses are exact strings so repeated runs emit
// byte-identical reports.

#include "vermaband/quantize.hpp"

#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

namespace vermaband {

struct SuiteCheck {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string witness;
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct SuiteBuilder {
    std::string suite;
    std::vector<SuiteCheck>& out;
    void add(const std::string& name, bool pass, std::string witness = "exact") {
        out.push_back({suite, name, pass, std::move(witness)});
    }
    void add_equal(const std::string& name, const BandOperator& lhs, const BandOperator& rhs) {
        bool pass = lhs == rhs;
        std::string witness = "exact";
        if (!pass) {
            BandOperator diff = lhs - rhs;
            witness = diff.bands().empty()
                          ? "finite-rank residual"
                          : "residual band d=" + std::to_string(diff.bands().begin()->first) +
                                ": " + diff.bands().begin()->second.str();
        }
        add(name, pass, witness);
    }
};

}  // namespace detail

inline std::vector<SuiteCheck> run_berezin_suite(const Weight& w) {
    std::vector<SuiteCheck> out;
    detail::SuiteBuilder b{"berezin", out};
    for (const auto& chk : check_berezin_relations(w))
        b.add(chk.note, chk.pass, chk.pass ? "exact" : "residual: " + chk.residual->str());
    auto wrong = check_berezin_relations(w, FOrdering::resolvent_last);
    bool discriminated = !wrong[1].pass && wrong[1].residual && !wrong[1].residual->is_zero();
    b.add("reversed operator order fails the relation", discriminated,
          discriminated ? "residual: " + wrong[1].residual->str() : "variant unexpectedly passed");
    if (w.at_limit_point()) {
        for (const auto& chk : toeplitz_limit_check(w))
            b.add(chk.note, chk.pass, chk.pass ? "exact" : "residual: " + chk.residual->str());
    } else {
        auto s = check_s_form(w);
        b.add(s.note, s.pass, s.pass ? "exact" : "residual: " + s.residual->str());
    }
    b.add_equal("adj(D) = F", gen_D(w).adjoint(), gen_F(w));
    {
        BandOperator df = gen_D(w) * gen_F(w);
        BandOperator fd = gen_F(w) * gen_D(w);
        bool diag = df.bands().count(0) == df.bands().size() &&
                    fd.bands().count(0) == fd.bands().size();
        b.add("DF and FD are diagonal", diag);
    }
    for (const auto& row : boundedness_report(w)) {
        bool finite = row.bound.has_value();
        bool pass = finite && ((row.name != "D" && row.name != "F") || *row.bound == 1.0);
        b.add("norm bound " + row.name, pass,
              finite ? detail::fmt17(*row.bound) : "unbounded");
    }
    return out;
}

inline std::vector<SuiteCheck> run_sl2_suite(const Weight& w) {
    std::vector<SuiteCheck> out;
    detail::SuiteBuilder b{"sl2", out};
    Sl2Triple t = gen_sl2(w);
    b.add_equal("[L1,L-1] = 2 L0", commutator(t.raise, t.lower), GaussianRational(2) * t.cartan);
    b.add_equal("[L0,L1] = -L1", commutator(t.cartan, t.raise), -t.raise);
    b.add_equal("[L0,L-1] = L-1", commutator(t.cartan, t.lower), t.lower);
    b.add_equal("adj(L1) = L-1", t.raise.adjoint(), t.lower);
    b.add_equal("gen_L(-1) matches", gen_L(-1, w), t.lower);
    b.add_equal("gen_L(0) matches", gen_L(0, w), t.cartan);
    b.add_equal("gen_L(1) matches", gen_L(1, w), t.raise);
    return out;
}

inline std::vector<SuiteCheck> run_witt_suite(const Weight& w) {
    std::vector<SuiteCheck> out;
    detail::SuiteBuilder b{"witt", out};
    for (const auto& item : exact_identity_suite(w)) b.add(item.name, item.pass);
    {
        long long total = 0, hs_ok = 0, rank_only = 0;
        for (long long m = -3; m <= 3; ++m)
            for (long long n = -3; n <= 3; ++n) {
                WittDefect d = witt_defect(m, n, w, 16);
                ++total;
                if (d.report.hs_verdict) ++hs_ok;
                if (d.defect.bands().empty()) ++rank_only;
            }
        b.add("defects are Hilbert-Schmidt for |m|,|n| <= 3", hs_ok == total,
              std::to_string(hs_ok) + "/" + std::to_string(total));
        if (w.at_limit_point())
            b.add("defect bands vanish at the limit weight", rank_only == total,
                  std::to_string(rank_only) + "/" + std::to_string(total));
    }
    {
        WittDefect d = witt_defect(2, -2, w, 16);
        if (w.at_limit_point()) {
            BandOperator expected =
                GaussianRational(Rational(1, 4)) *
                (BandOperator::projector(w, 0) + BandOperator::projector(w, 1));
            b.add("Delta(2,-2) = (P0 + P1)/4", d.defect == expected,
                  "corrections (0,0)=1/4, (1,1)=1/4");
        } else {
            b.add("Delta(2,-2) is Hilbert-Schmidt", d.report.hs_verdict,
                  "min decay order " + std::to_string(d.report.min_decay_order));
        }
        WittDefect swapped = witt_defect(-2, 2, w, 16);
        b.add("Delta(m,n) = -Delta(n,m)", d.defect == -swapped.defect);
    }
    {
        WittDefect d = witt_defect(3, -1, w, 16);
        bool only_band = true;
        for (const auto& [deg, phi] : d.defect.bands()) {
            (void)phi;
            if (deg != -2) only_band = false;
        }
        b.add("Delta(3,-1) carries only the degree -(m+n) band", only_band);
    }
    return out;
}

inline std::vector<SuiteCheck> run_quantize_suite(const Weight& w) {
    std::vector<SuiteCheck> out;
    detail::SuiteBuilder b{"quantize", out};
    Symbol z = Symbol::monomial(1);
    Symbol zi = Symbol::monomial(-1);
    b.add_equal("Op(z) = F", op_quantize(z, w), gen_F(w));
    b.add_equal("Op(1/z) = D", op_quantize(zi, w), gen_D(w));
    b.add_equal("Op(1) = I", op_quantize(Symbol::one(), w), BandOperator::identity(w));
    {
        Symbol f = Symbol::monomial(1) + GaussianRational(Rational(1, 2)) * Symbol::monomial(-2);
        b.add_equal("Op(conj f) = adj(Op f)", op_quantize(f.conj(), w), op_quantize(f, w).adjoint());
        Symbol g = GaussianRational::i() * Symbol::monomial(2) - GaussianRational(2) * Symbol::monomial(-1);
        b.add_equal("Op(conj g) = adj(Op g)", op_quantize(g.conj(), w), op_quantize(g, w).adjoint());
    }
    {
        // closed forms of the generating product defects
        GaussianRational one_minus_2h{Rational(1) - 2 * w.h()};
        GaussianRational two_h{2 * w.h()};
        BandOperator df_defect = product_defect(zi, z, w, 8).defect;
        BandOperator expected_df = BandOperator::make(
            w, {{0, RatFunc(Poly(one_minus_2h), Poly::linear(two_h))}});
        b.add_equal("Op(1/z)Op(z) - I = diag((1-2h)/(n+2h))", df_defect, expected_df);
        BandOperator fd_defect = product_defect(z, zi, w, 8).defect;
        if (w.at_limit_point()) {
            b.add_equal("Op(z)Op(1/z) - I = -P0", fd_defect, -BandOperator::projector(w, 0));
        } else {
            BandOperator expected_fd = BandOperator::make(
                w, {{0, RatFunc(Poly(one_minus_2h),
                                Poly::linear(two_h - GaussianRational(1)))}});
            b.add_equal("Op(z)Op(1/z) - I = diag((1-2h)/(n-1+2h))", fd_defect, expected_fd);
        }
        Symbol g = GaussianRational(3) * Symbol::monomial(2) + Symbol::monomial(-1);
        b.add("Op(1) absorbs products", product_defect(Symbol::one(), g, w, 8).defect.is_zero());
    }
    b.add("[L-1, F] = F**2 = Op(l_-1 z)",
          derivation_defect(VField::generator(-1), z, w, 8).defect.is_zero());
    b.add("[L1, F] = I = Op(l_1 z)",
          derivation_defect(VField::generator(1), z, w, 8).defect.is_zero());
    b.add("[L1, D] = -D**2 = Op(l_1 1/z)",
          derivation_defect(VField::generator(1), zi, w, 8).defect.is_zero());
    b.add("[L-1, D] = -I = Op(l_-1 1/z)",
          derivation_defect(VField::generator(-1), zi, w, 8).defect.is_zero());
    if (!w.at_limit_point()) {
        // ||Op(1/z)Op(z) - I||_HS^2 = hbar^2 psi'(2h)
        auto rep = product_defect(zi, z, w, 4000).report;
        double hbar = to_double(w.hbar());
        double law = hbar * hbar * trigamma(to_double(2 * w.h()));
        double got = rep.hs_norm_sq_bound();
        bool pass = std::abs(got - law) <= 1e-6 * law;
        b.add("product defect follows hbar^2 psi'(2h)", pass,
              detail::fmt17(got) + " vs " + detail::fmt17(law));
    }
    return out;
}

inline std::vector<SuiteCheck> run_suite(const std::string& name, const Weight& w) {
    if (name == "berezin") return run_berezin_suite(w);
    if (name == "sl2") return run_sl2_suite(w);
    if (name == "witt") return run_witt_suite(w);
    if (name == "quantize") return run_quantize_suite(w);
    if (name == "all") {
        std::vector<SuiteCheck> out;
        for (const char* s : {"berezin", "sl2", "witt", "quantize"}) {
            auto part = run_suite(s, w);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected berezin, sl2, witt, quantize or all)");
}

}  // namespace vermaband
