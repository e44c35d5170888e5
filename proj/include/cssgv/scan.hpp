#ifndef CSSGV_SCAN_HPP
#define CSSGV_SCAN_HPP

#include <atomic>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cssgv/certify.hpp"
#include "cssgv/entropy.hpp"
#include "cssgv/exponents.hpp"
#include "cssgv/published.hpp"
#include "cssgv/version.hpp"

namespace cssgv {

// Deterministic parallel map: work is partitioned by index and results are
// written into index-addressed slots, so the outcome is identical for any
// thread count or schedule.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned use = std::min<unsigned>(threads, static_cast<unsigned>(n));
    pool.reserve(use);
    for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

enum class Category { CertifiedGV, NearGV, PositiveNonGV, ZeroProxy };

inline const char* category_name(Category c) {
    switch (c) {
        case Category::CertifiedGV: return "CertifiedGV";
        case Category::NearGV: return "NearGV";
        case Category::PositiveNonGV: return "PositiveNonGV";
        case Category::ZeroProxy: return "ZeroProxy";
    }
    return "?";
}

struct ScanRecord {
    BalancedTriple triple;
    bool in_window = false;
    bool k_even = false, j_Z_even = false;
    double R_Q_des = 0.0;
    double gv_classical = 0.0; // h2^{-1}(1 - R_des) = h2^{-1}(alpha_Z)
    double gv_css = 0.0;       // h2^{-1}(j_Z / k)
    double proxy_Z = 0.0, proxy_X = 0.0, proxy_min = 0.0;
    Category category = Category::ZeroProxy;
    std::vector<Certificate> certificates;
};

// Search window T_scan = {(j_Z, j_X, k) : k <= 30, j_Z <= 10, j_Z < k/2,
// j_X = k - j_Z}, ordered by (k, j_Z).
inline std::vector<BalancedTriple> enumerate_window_triples() {
    std::vector<BalancedTriple> out;
    for (unsigned k = 3; k <= 30; ++k)
        for (unsigned jz = 1; jz <= 10 && 2 * jz < k; ++jz)
            out.push_back(BalancedTriple{jz, k - jz, k});
    return out;
}

inline bool in_window(const BalancedTriple& t) {
    return t.k <= 30 && t.j_Z <= 10 && 2 * t.j_Z < t.k && t.j_X == t.k - t.j_Z;
}

// near_gv_rel_tol operationalizes "very near the GV curve". Every j_Z >= 4
// proxy lands on its GV point to ~1e-6 relative and the j_Z = 3 offsets are
// 7.7% for (3,4,7) and >= 18% for the rest, so 10% is the separating choice;
// it is recorded in output metadata.
struct ClassifyOptions {
    ProxyParams proxy{};
    SupOptions sup{};
    double near_gv_rel_tol = 0.10;
    bool with_proxies = true;
};

inline ScanRecord classify(const BalancedTriple& t, const ClassifyOptions& co = {}) {
    t.validate();
    ScanRecord rec;
    rec.triple = t;
    rec.in_window = in_window(t);
    rec.k_even = t.k % 2 == 0;
    rec.j_Z_even = t.j_Z % 2 == 0;
    rec.R_Q_des = 1.0 - 2.0 * t.alpha_Z();
    rec.gv_classical = binary_entropy_inv(t.alpha_Z());
    rec.gv_css = binary_entropy_inv(double(t.j_Z) / t.k);

    Certificate ha, mn;
    if (auto row = find_d1(t)) {
        ha = ha_certify(t, row->beta_Z, row->delta_bar, row->eps_Z, co.sup);
    } else {
        ha = ha_certify(t, 0.1, std::min(0.49, rec.gv_classical * (1.0 + 1e-4)), 0.0,
                        co.sup);
    }
    if (auto row = find_e1(t)) {
        mn = mn_certify(t, row->beta_X, row->eps_X, co.sup);
    } else {
        mn = mn_certify(t, 0.10, 0.0, co.sup);
    }
    rec.certificates = {ha, mn};

    if (co.with_proxies) {
        rec.proxy_Z = proxy_delta_Z(t, co.proxy);
        rec.proxy_X = proxy_delta_X(t, co.proxy);
        rec.proxy_min = std::min(rec.proxy_Z, rec.proxy_X);
    }

    const bool certified = ha.status == CertStatus::Certified &&
                           mn.status == CertStatus::Certified;
    if (certified) {
        rec.category = Category::CertifiedGV;
    } else if (rec.proxy_min == 0.0) {
        rec.category = Category::ZeroProxy;
    } else if (std::fabs(rec.proxy_min - rec.gv_classical) <=
               co.near_gv_rel_tol * rec.gv_classical) {
        rec.category = Category::NearGV;
    } else {
        rec.category = Category::PositiveNonGV;
    }
    return rec;
}

inline std::vector<ScanRecord> scan_window(const ClassifyOptions& co = {},
                                           unsigned threads = 1) {
    const std::vector<BalancedTriple> triples = enumerate_window_triples();
    std::vector<ScanRecord> out(triples.size());
    parallel_for(triples.size(), threads,
                 [&](std::size_t i) { out[i] = classify(triples[i], co); });
    return out;
}

// ---------------------------------------------------------------------------
// CSV emission. Every CSV starts with a header row preceded by a metadata
// comment carrying toolkit version, seeds, and grid parameters; the
// timestamp can be suppressed for byte-identical reruns.
// ---------------------------------------------------------------------------
struct EmitOptions {
    bool timestamp = false;
    std::string timestamp_value; // filled by the CLI when enabled
    std::uint64_t seed = 0;
};

inline std::string csv_metadata_line(const EmitOptions& eo) {
    std::ostringstream os;
    os << "# cssgv " << version_string;
    if (eo.timestamp && !eo.timestamp_value.empty()) os << " generated=" << eo.timestamp_value;
    os << " seed=" << eo.seed
       << " grid: tau=4096 ab=512x512 scan_step=1e-4 bisect=1e-7"
       << " min_width=1e-9 max_boxes=1e7 wo_mode_proxy=infimum near_gv_tol=0.10\n";
    return os.str();
}

inline std::string fmt_g(double v, int prec = 10) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    return buf;
}

enum class TableId { D, E, F };

inline std::string emit_table(TableId which, const EmitOptions& eo = {},
                              const SupOptions& sup = {}, unsigned threads = 1) {
    std::ostringstream os;
    os << csv_metadata_line(eo);
    if (which == TableId::D) {
        os << "j_Z,j_X,k,beta_Z,delta_bar,lambda_Z,lambda_Z_published,eps_Z_published,"
              "margin_Z,status,pass\n";
        std::vector<std::string> lines(table_d1.size());
        parallel_for(table_d1.size(), threads, [&](std::size_t i) {
            const HaRow& r = table_d1[i];
            const BalancedTriple t{r.j_Z, r.j_X, r.k};
            const Certificate c = ha_certify(t, r.beta_Z, r.delta_bar, r.eps_Z, sup);
            const bool pass =
                c.status == CertStatus::Certified && c.margin >= 0.9 * r.eps_Z;
            std::ostringstream ls;
            ls << r.j_Z << ',' << r.j_X << ',' << r.k << ',' << fmt_g(r.beta_Z) << ','
               << fmt_g(r.delta_bar) << ',' << fmt_g(c.constants.lambda_Z, 12) << ','
               << fmt_g(r.lambda_Z, 12) << ',' << fmt_g(r.eps_Z) << ',' << fmt_g(c.margin)
               << ',' << status_name(c.status) << ',' << (pass ? 1 : 0) << '\n';
            lines[i] = ls.str();
        });
        for (const auto& l : lines) os << l;
    } else if (which == TableId::E) {
        os << "j_Z,j_X,k,beta_X,B_X,B_X_published,eps_X_published,margin_X,status,pass\n";
        std::vector<std::string> lines(table_e1.size());
        parallel_for(table_e1.size(), threads, [&](std::size_t i) {
            const MnRow& r = table_e1[i];
            const BalancedTriple t{r.j_Z, r.j_X, r.k};
            const Certificate c = mn_certify(t, r.beta_X, r.eps_X, sup);
            const bool pass =
                c.status == CertStatus::Certified && c.margin >= 0.9 * r.eps_X;
            std::ostringstream ls;
            ls << r.j_Z << ',' << r.j_X << ',' << r.k << ',' << fmt_g(r.beta_X) << ','
               << fmt_g(c.constants.B_X, 8) << ',' << fmt_g(r.B_X, 8) << ','
               << fmt_g(r.eps_X) << ',' << fmt_g(c.margin) << ',' << status_name(c.status)
               << ',' << (pass ? 1 : 0) << '\n';
            lines[i] = ls.str();
        });
        for (const auto& l : lines) os << l;
    } else {
        os << "j,k,beta_Z,delta_bar,lambda_Z,lambda_Z_published,eps_Z_published,margin_Z,"
              "status_Z,pass_Z,beta_X,B_X,B_X_published,eps_X_published,margin_X,status_X,"
              "pass_X\n";
        std::vector<std::string> lines(table_f1.size());
        parallel_for(table_f1.size(), threads, [&](std::size_t i) {
            const BoundaryRow& r = table_f1[i];
            const BalancedTriple t{r.j, r.j, 2 * r.j};
            const Certificate hz = ha_certify(t, r.beta_Z, r.delta_bar, r.eps_Z, sup);
            const Certificate mx = mn_certify(t, r.beta_X, r.eps_X, sup);
            const bool pass_z =
                hz.status == CertStatus::Certified && hz.margin >= 0.9 * r.eps_Z;
            const bool pass_x =
                mx.status == CertStatus::Certified && mx.margin >= 0.9 * r.eps_X;
            std::ostringstream ls;
            ls << r.j << ',' << 2 * r.j << ',' << fmt_g(r.beta_Z) << ','
               << fmt_g(r.delta_bar) << ',' << fmt_g(hz.constants.lambda_Z, 12) << ','
               << fmt_g(r.lambda_Z, 12) << ',' << fmt_g(r.eps_Z) << ',' << fmt_g(hz.margin)
               << ',' << status_name(hz.status) << ',' << (pass_z ? 1 : 0) << ','
               << fmt_g(r.beta_X) << ',' << fmt_g(mx.constants.B_X, 8) << ','
               << fmt_g(r.B_X, 8) << ',' << fmt_g(r.eps_X) << ',' << fmt_g(mx.margin)
               << ',' << status_name(mx.status) << ',' << (pass_x ? 1 : 0) << '\n';
            lines[i] = ls.str();
        });
        for (const auto& l : lines) os << l;
    }
    return os.str();
}

inline std::string emit_scan_csv(const std::vector<ScanRecord>& records,
                                 const EmitOptions& eo = {}) {
    std::ostringstream os;
    os << csv_metadata_line(eo);
    os << "j_Z,j_X,k,in_window,R_Q_des,gv_classical,gv_css,proxy_Z,proxy_X,proxy_min,"
          "category,ha_status,ha_margin,mn_status,mn_margin\n";
    for (const auto& r : records) {
        os << r.triple.j_Z << ',' << r.triple.j_X << ',' << r.triple.k << ','
           << (r.in_window ? 1 : 0) << ',' << fmt_g(r.R_Q_des) << ','
           << fmt_g(r.gv_classical) << ',' << fmt_g(r.gv_css) << ',' << fmt_g(r.proxy_Z)
           << ',' << fmt_g(r.proxy_X) << ',' << fmt_g(r.proxy_min) << ','
           << category_name(r.category);
        for (const auto& c : r.certificates)
            os << ',' << status_name(c.status) << ',' << fmt_g(c.margin);
        os << '\n';
    }
    return os.str();
}

// Figure-7 data: window triples with positive proxy plus the balanced GV
// curve delta = h2^{-1}((1 - R)/2) sampled at step 0.005.
inline std::string emit_figure_data(const std::vector<ScanRecord>& records,
                                    const EmitOptions& eo = {}) {
    std::ostringstream os;
    os << csv_metadata_line(eo);
    os << "j_Z,j_X,k,R_Q_des,proxy_min,gv_curve_value,category\n";
    for (const auto& r : records) {
        if (r.category == Category::ZeroProxy) continue;
        os << r.triple.j_Z << ',' << r.triple.j_X << ',' << r.triple.k << ','
           << fmt_g(r.R_Q_des) << ',' << fmt_g(r.proxy_min) << ','
           << fmt_g(binary_entropy_inv((1.0 - r.R_Q_des) / 2.0)) << ','
           << category_name(r.category) << '\n';
    }
    for (int i = 0; i <= 200; ++i) {
        const double rq = double(i) * 0.005;
        os << ",,," << fmt_g(rq) << ",," << fmt_g(binary_entropy_inv((1.0 - rq) / 2.0))
           << ",curve\n";
    }
    return os.str();
}

} // namespace cssgv

#endif
