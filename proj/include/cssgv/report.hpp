#ifndef CSSGV_REPORT_HPP
#define CSSGV_REPORT_HPP

#include <json.hpp>

#include "cssgv/certify.hpp"
#include "cssgv/css.hpp"
#include "cssgv/scan.hpp"

namespace cssgv {

using json = nlohmann::json;

inline json rat_json(const Rat& q) {
    return json{{"rational", rat_string(q)}, {"value", rat_double(q)}};
}

inline json triple_json(const BalancedTriple& t) {
    return json{{"j_Z", t.j_Z}, {"j_X", t.j_X}, {"k", t.k}};
}

inline json constants_json(const CertConstants& c) {
    json j{{"beta_Z", c.beta_Z},       {"delta_bar", c.delta_bar},
           {"lambda_Z", c.lambda_Z},   {"beta_X", c.beta_X},
           {"B_X", c.B_X},             {"omega_star", c.omega_star},
           {"tau_0", c.tau_0},         {"rho_0", c.rho_0},
           {"C_0", c.C_0},             {"c_0", c.c_0},
           {"eta_X", c.eta_X},         {"odd_corner", c.odd_corner},
           {"boundary", c.boundary}};
    if (c.eps_Z_published > 0) j["eps_Z_published"] = c.eps_Z_published;
    if (c.eps_X_published > 0) j["eps_X_published"] = c.eps_X_published;
    return j;
}

inline json certificate_json(const Certificate& c) {
    json j{{"side", c.side},
           {"status", status_name(c.status)},
           {"region", c.region},
           {"threshold", c.threshold},
           {"certified_sup_bound", c.certified_sup_bound},
           {"margin", c.margin},
           {"boxes_processed", c.boxes_processed},
           {"max_depth", c.max_depth},
           {"min_width", c.min_width},
           {"max_boxes", c.max_boxes},
           {"constants", constants_json(c.constants)}};
    if (c.triple.k) j["triple"] = triple_json(c.triple);
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.published_eps > 0) j["published_eps"] = c.published_eps;
    return j;
}

inline json rate_report_json(const RateReport& r) {
    return json{{"rank_AZ", r.rank_AZ}, {"rank_AX", r.rank_AX}, {"rank_B", r.rank_B},
                {"L_Z", r.L_Z},         {"L_X", r.L_X},         {"R_Z", rat_json(r.R_Z)},
                {"R_X", rat_json(r.R_X)}, {"R_Q", rat_json(r.R_Q)},
                {"R_Z_des", rat_json(r.R_Z_des)}, {"R_X_des", rat_json(r.R_X_des)},
                {"R_Q_des", rat_json(r.R_Q_des)}};
}

inline json distance_json(const DistanceReport& d) {
    auto enc = [](const std::optional<std::size_t>& v) {
        return v ? json(*v) : json("inf");
    };
    return json{{"d_CZ", enc(d.d_CZ)},
                {"d_CX", enc(d.d_CX)},
                {"d_Z_rel", enc(d.d_Z_rel)},
                {"d_X_rel", enc(d.d_X_rel)}};
}

inline json scan_record_json(const ScanRecord& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
    return json{{"triple", triple_json(r.triple)},
                {"in_window", r.in_window},
                {"k_even", r.k_even},
                {"j_Z_even", r.j_Z_even},
                {"R_Q_des", r.R_Q_des},
                {"gv_classical", r.gv_classical},
                {"gv_css", r.gv_css},
                {"proxy_Z", r.proxy_Z},
                {"proxy_X", r.proxy_X},
                {"proxy_min", r.proxy_min},
                {"category", category_name(r.category)},
                {"certificates", certs}};
}

} // namespace cssgv

#endif
