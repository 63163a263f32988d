#pragma once

// JSON and CSV emission.  Exact values serialize exactly (rationals as
// "p/q", Gaussian coefficients as numerator/denominator quadruples); floats
// carry 17 significant digits in CSV and round-trip-exact form in JSON.
// Nothing here depends on the clock, so reports are byte-deterministic.

#include "vermaband/defect.hpp"
#include "vermaband/conformal.hpp"
#include "vermaband/quantize.hpp"
#include "vermaband/suites.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace vermaband {

using Json = nlohmann::ordered_json;

namespace detail {

inline long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::range_error("coefficient exceeds the 64-bit JSON integer range");
    return v.convert_to<long long>();
}

inline Json quad(const GaussianRational& c) {
    return Json::array({to_int64(numerator(c.re())), to_int64(denominator(c.re())),
                        to_int64(numerator(c.im())), to_int64(denominator(c.im()))});
}

inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(quad(c));
    return arr;
}

}  // namespace detail

inline Json ratfunc_to_json(const RatFunc& f) {
    return Json{{"num", detail::poly_to_json(f.num())}, {"den", detail::poly_to_json(f.den())}};
}

inline Json operator_to_json(const BandOperator& op) {
    Json bands = Json::array();
    for (const auto& [d, phi] : op.bands()) {
        Json b = ratfunc_to_json(phi);
        Json entry;
        entry["degree"] = d;
        entry["num"] = b["num"];
        entry["den"] = b["den"];
        bands.push_back(std::move(entry));
    }
    Json corr = Json::array();
    for (const auto& [pos, x] : op.corrections()) {
        Json q = detail::quad(x);
        corr.push_back(Json::array({pos.first, pos.second, q[0], q[1], q[2], q[3]}));
    }
    return Json{{"bands", std::move(bands)}, {"corrections", std::move(corr)}};
}

inline Json report_to_json(const BandOperator& op, const DefectReport& rep) {
    Json j;
    j["h"] = to_string(rep.weight.h());
    j["hbar"] = to_string(rep.weight.hbar());
    j["operator"] = operator_to_json(op);
    Json hs;
    hs["verdict"] = rep.hs_verdict;
    hs["partial"] = rep.norm.partial_sum;
    hs["tail_bound"] = rep.norm.tail_bound;
    hs["N"] = rep.norm.N_used;
    j["hs"] = std::move(hs);
    j["asymptotic_scalar"] = asymptotic_to_string(rep);
    return j;
}

inline void sweep_to_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "h,hbar,m,n,hs_norm,decay_order_min,asymptotic_scalar,finite_rank_norm\n";
    for (const auto& r : rows) {
        os << to_string(r.h) << ',' << to_string(r.hbar) << ',' << r.m << ',' << r.n << ','
           << detail::fmt17(r.hs_norm) << ','
           << (r.min_decay_order == kDecayInfinity ? std::string("inf")
                                                   : std::to_string(r.min_decay_order))
           << ',' << r.asymptotic_scalar << ',' << detail::fmt17(r.finite_rank_norm) << '\n';
    }
}

inline Json sweep_to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["h"] = to_string(r.h);
        j["hbar"] = to_string(r.hbar);
        j["m"] = r.m;
        j["n"] = r.n;
        j["hs_norm"] = r.hs_norm;
        j["decay_order_min"] =
            r.min_decay_order == kDecayInfinity ? Json("inf") : Json(r.min_decay_order);
        j["asymptotic_scalar"] = r.asymptotic_scalar;
        j["finite_rank_norm"] = r.finite_rank_norm;
        arr.push_back(std::move(j));
    }
    return arr;
}

// symbols and vector fields travel as [[k, re_num, re_den, im_num, im_den], ...]
inline Json symbol_to_json(const Symbol& f) {
    Json arr = Json::array();
    for (const auto& [k, c] : f.coefficients()) {
        Json q = detail::quad(c);
        arr.push_back(Json::array({k, q[0], q[1], q[2], q[3]}));
    }
    return arr;
}

inline Symbol symbol_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("symbol JSON must be a list of quintuples");
    Symbol::Coeffs c;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 5)
            throw std::invalid_argument("symbol term must be [k, re_num, re_den, im_num, im_den]");
        long long k = row[0].get<long long>();
        Rational re(Int(row[1].get<long long>()), Int(row[2].get<long long>()));
        Rational im(Int(row[3].get<long long>()), Int(row[4].get<long long>()));
        c[k] += GaussianRational(re, im);
    }
    return Symbol(std::move(c));
}

inline VField vfield_from_json(const Json& j) {
    Symbol s = symbol_from_json(j);
    VField::Coeffs c(s.coefficients().begin(), s.coefficients().end());
    return VField(std::move(c));
}

inline Json scaling_to_json(const ScalingResult& res, const std::string& probe) {
    Json j;
    j["probe"] = probe;
    Json pts = Json::array();
    for (const auto& p : res.table) {
        Json e;
        e["h"] = to_string(p.h);
        e["hbar"] = to_string(p.hbar);
        e["norm"] = p.norm;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    j["slope"] = res.slope ? Json(*res.slope) : Json(nullptr);
    j["exact_zero"] = res.exact_zero;
    return j;
}

inline void scaling_to_csv(const ScalingResult& res, std::ostream& os) {
    os << "h,hbar,norm\n";
    for (const auto& p : res.table)
        os << to_string(p.h) << ',' << to_string(p.hbar) << ',' << detail::fmt17(p.norm) << '\n';
}

inline Json checks_to_json(const Weight& w, const std::string& suite,
                           const std::vector<SuiteCheck>& checks) {
    Json arr = Json::array();
    long long passed = 0;
    for (const auto& c : checks) {
        Json j;
        j["suite"] = c.suite;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["witness"] = c.witness;
        arr.push_back(std::move(j));
        if (c.pass) ++passed;
    }
    Json j;
    j["h"] = to_string(w.h());
    j["hbar"] = to_string(w.hbar());
    j["suite"] = suite;
    j["checks"] = std::move(arr);
    j["passed"] = passed;
    j["total"] = static_cast<long long>(checks.size());
    j["pass"] = passed == static_cast<long long>(checks.size());
    return j;
}

// exact monomial truncation as (row, col, re, im) with "p/q" cells
inline void truncation_to_csv(const BandOperator& op, int N, std::ostream& os) {
    os << "row,col,re,im\n";
    auto m = op.truncate_monomial(N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            const auto& v = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (v.is_zero()) continue;
            os << r << ',' << c << ',' << to_string(v.re()) << ',' << to_string(v.im()) << '\n';
        }
}

}  // namespace vermaband
