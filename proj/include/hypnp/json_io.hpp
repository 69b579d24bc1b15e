#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobenius.hpp"
#include "hodge.hpp"
#include "padic.hpp"
#include "params.hpp"
#include "polygon.hpp"

namespace hypnp {

using nlohmann::json;

inline json rat_json(const Rat& x) { return rat_str(x); }

inline json rat_list_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

inline json polygon_json(const Polygon& poly) {
    json v = json::array();
    for (const auto& [k, h] : poly.vertices()) v.push_back(json::array({k, rat_str(h)}));
    return json{{"slopes", rat_list_json(poly.slopes())}, {"vertices", v}};
}

inline json params_json(const HypParams& p) {
    json a = json::array(), b = json::array();
    for (const auto& x : p.alpha) a.push_back(rat_str(x));
    for (const auto& x : p.beta) b.push_back(rat_str(x));
    return json{{"alpha", a}, {"beta", b}};
}

/// Loads {"alpha": ["0","1/2",...], "beta": [...]} and normalizes.
inline HypParams params_from_json(const json& j) {
    std::vector<Rat> a, b;
    for (const auto& x : j.at("alpha")) a.push_back(parse_rat(x.get<std::string>()));
    for (const auto& x : j.at("beta")) b.push_back(parse_rat(x.get<std::string>()));
    return normalize(std::move(a), std::move(b));
}

inline json padic_json(const PadicElement& x) {
    json rows = json::array();
    for (int i = 0; i < x.R->rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < x.R->s; ++j) row.push_back(x.at(i, j));
        rows.push_back(row);
    }
    return json{{"pi_coeffs", rows}, {"precision", x.prec}};
}

inline json report_json(const FrobeniusReport& r) {
    auto opt_ords = [](const std::vector<std::optional<Rat>>& v) {
        json a = json::array();
        for (const auto& x : v) {
            if (x)
                a.push_back(rat_str(*x));
            else
                a.push_back(nullptr);
        }
        return a;
    };
    json j{{"p", r.params.p},
           {"s", r.params.s},
           {"aexps", r.params.a_exps},
           {"bexps", r.params.b_exps},
           {"point", r.point_code},
           {"point_log", r.point_log},
           {"epsilon", r.epsilon},
           {"trace_ords", opt_ords(r.trace_ords)},
           {"charpoly_ords", opt_ords(r.charpoly_ords)},
           {"newton_polygon", polygon_json(r.newton_polygon)},
           {"hodge_polygon", polygon_json(r.hodge_polygon)},
           {"verdict", r.verdict},
           {"resonant", r.resonant},
           {"precision", r.precision_used}};
    if (r.experimental) j["experimental"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline std::string slopes_str(const Polygon& poly) {
    std::string s;
    for (const auto& x : poly.slopes()) {
        if (!s.empty()) s += " ";
        s += rat_str(x);
    }
    return s;
}

inline std::string exps_str(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) {
        if (!s.empty()) s += " ";
        s += std::to_string(x);
    }
    return s;
}

/// One CSV row: p,s,n,m,aexps,bexps,point,verdict,np_slopes,hp_slopes
inline std::string report_csv_row(const FrobeniusReport& r) {
    std::string s;
    s += std::to_string(r.params.p) + "," + std::to_string(r.params.s) + ",";
    s += std::to_string(r.params.n()) + "," + std::to_string(r.params.m()) + ",";
    s += exps_str(r.params.a_exps) + "," + exps_str(r.params.b_exps) + ",";
    s += std::to_string(r.point_code) + "," + r.verdict + ",";
    s += slopes_str(r.newton_polygon) + "," + slopes_str(r.hodge_polygon);
    return s;
}

inline const char* report_csv_header() {
    return "p,s,n,m,aexps,bexps,point,verdict,np_slopes,hp_slopes";
}

}  // namespace hypnp
