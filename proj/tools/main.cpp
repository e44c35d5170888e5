// Command-line entry point: sampling, construction, exact enumeration,
// certification, scanning, and table/figure export.

#include <CLI11.hpp>

#include <ctime>
#include <fstream>
#include <iostream>

#include "cssgv/css.hpp"
#include "cssgv/f2m.hpp"
#include "cssgv/report.hpp"
#include "cssgv/scan.hpp"
#include "cssgv/version.hpp"

namespace {

using namespace cssgv;

struct GlobalOpts {
    unsigned threads = 1;
    bool no_timestamp = false;
    bool strict = false;
    std::string out;
};

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

EmitOptions emit_options(const GlobalOpts& g, std::uint64_t seed) {
    EmitOptions eo;
    eo.seed = seed;
    eo.timestamp = !g.no_timestamp;
    if (eo.timestamp) eo.timestamp_value = now_iso8601();
    return eo;
}

void write_out(const GlobalOpts& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw io_error("cannot open output file: " + g.out);
    os << payload;
}

json meta_json(const GlobalOpts& g, std::uint64_t seed) {
    json j{{"toolkit", "cssgv"}, {"version", version_string}, {"seed", seed}};
    if (!g.no_timestamp) j["generated"] = now_iso8601();
    return j;
}

BalancedTriple parse_triple(const std::string& s) {
    BalancedTriple t;
    if (std::sscanf(s.c_str(), "%u,%u,%u", &t.j_Z, &t.j_X, &t.k) != 3)
        throw domain_violation("triple must be j_Z,j_X,k");
    t.validate();
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"nested CSS code-pair construction and GV certification toolkit"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads (results are schedule-independent)");
    app.add_flag("--no-timestamp", g.no_timestamp, "suppress timestamps for byte-identical reruns");
    app.add_flag("--strict", g.strict, "require an explicit --seed on randomized subcommands");
    app.add_option("--out", g.out, "output file (default stdout)");

    // ---- sample ----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "draw one regular matrix, emit F2M");
    unsigned s_j = 3, s_krow = 6;
    std::size_t s_n = 12;
    std::uint64_t s_seed = 0;
    bool s_simple = false;
    bool s_seed_set = false;
    std::uint64_t s_stream = 0;
    sample->add_option("--j", s_j, "column degree")->required();
    sample->add_option("--krow", s_krow, "row degree")->required();
    sample->add_option("--n", s_n, "columns")->required();
    sample->add_option("--seed", s_seed)->each([&](const std::string&) { s_seed_set = true; });
    sample->add_option("--stream", s_stream, "stream id");
    sample->add_flag("--simple", s_simple, "condition on the simple-graph event");

    // ---- build / verify ---------------------------------------------------
    auto add_profile = [](CLI::App* cmd, DegreeProfile& p) {
        cmd->add_option("--jz", p.j_Z)->required();
        cmd->add_option("--kz", p.k_Z)->required();
        cmd->add_option("--jd", p.j_Delta)->required();
        cmd->add_option("--kd", p.k_Delta);
        cmd->add_option("--k", p.k)->required();
        cmd->add_option("--n", p.n)->required();
    };
    auto* build = app.add_subcommand("build", "sample a family instance and report rates");
    DegreeProfile b_prof;
    std::uint64_t b_seed = 0;
    bool b_seed_set = false, b_simple = false, b_matrices = false, b_distances = false;
    add_profile(build, b_prof);
    build->add_option("--seed", b_seed)->each([&](const std::string&) { b_seed_set = true; });
    build->add_flag("--simple", b_simple);
    build->add_flag("--emit-matrices", b_matrices, "inline F2M text in the report");
    build->add_flag("--distances", b_distances, "exhaustive distances (small n)");

    auto* verify = app.add_subcommand("verify", "CSS identities and affine-system checks");
    DegreeProfile v_prof;
    std::uint64_t v_seed = 0;
    bool v_seed_set = false;
    add_profile(verify, v_prof);
    verify->add_option("--seed", v_seed)->each([&](const std::string&) { v_seed_set = true; });

    // ---- enum -------------------------------------------------------------
    auto* enumc = app.add_subcommand("enum", "exact ensemble enumerators (CSV)");
    std::string e_op = "outer";
    unsigned e_jz = 4, e_jd = 2, e_k = 10;
    std::size_t e_n = 10;
    enumc->add_option("--op", e_op, "outer | kernel | habound | stacked | ndep")
        ->check(CLI::IsMember({"outer", "kernel", "habound", "stacked", "ndep"}));
    enumc->add_option("--jz", e_jz);
    enumc->add_option("--jd", e_jd);
    enumc->add_option("--k", e_k)->required();
    enumc->add_option("--n", e_n)->required();
    bool e_allones = false;
    enumc->add_flag("--all-ones", e_allones, "all-ones syndrome coset (stacked/ndep)");

    // ---- oracle -----------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "Monte Carlo cross-validation of the stacked mean");
    unsigned o_jz = 2, o_jd = 2, o_k = 4;
    std::size_t o_n = 4, o_t1 = 1, o_td = 0, o_w = 1, o_samples = 1000000;
    std::uint64_t o_seed = 0;
    bool o_seed_set = false;
    oracle->add_option("--jz", o_jz);
    oracle->add_option("--jd", o_jd);
    oracle->add_option("--k", o_k)->required();
    oracle->add_option("--n", o_n)->required();
    oracle->add_option("--t1", o_t1);
    oracle->add_option("--td", o_td);
    oracle->add_option("--w", o_w);
    oracle->add_option("--samples", o_samples);
    oracle->add_option("--seed", o_seed)->each([&](const std::string&) { o_seed_set = true; });

    // ---- certify ----------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "interval certification");
    std::string c_triple;
    bool c_tables = false, c_all = false;
    double c_beta_z = 0, c_delta_bar = 0, c_beta_x = 0;
    unsigned c_psi = 0, c_boundary = 0;
    certify->add_option("--triple", c_triple, "j_Z,j_X,k");
    certify->add_flag("--tables", c_tables, "use the published constants for --triple");
    certify->add_flag("--all-tables", c_all, "certify every table row (D, E, F)");
    certify->add_option("--beta-z", c_beta_z);
    certify->add_option("--delta-bar", c_delta_bar);
    certify->add_option("--beta-x", c_beta_x);
    certify->add_option("--psi", c_psi, "certify Psi_k for this k");
    certify->add_option("--boundary", c_boundary, "boundary triple (j,j,2j)");

    // ---- scan / figure / tables --------------------------------------------
    auto* scan = app.add_subcommand("scan", "classify the search window");
    bool sc_window = false, sc_no_proxies = false, sc_json = false;
    scan->add_flag("--window", sc_window, "scan the full window");
    scan->add_flag("--no-proxies", sc_no_proxies, "skip proxy computation");
    scan->add_flag("--json", sc_json, "JSON records instead of CSV");
    std::string sc_triple;
    scan->add_option("--triple", sc_triple, "classify a single triple");

    auto* figure = app.add_subcommand("figure", "figure-style CSV (proxies vs GV curve)");
    auto* tables = app.add_subcommand("tables", "reproduce a published table as CSV");
    std::string t_which = "D";
    tables->add_option("--which", t_which)->check(CLI::IsMember({"D", "E", "F"}));

    auto* proxy = app.add_subcommand("proxy", "rightmost-zero distance proxies for one triple");
    std::string p_triple;
    proxy->add_option("--triple", p_triple, "j_Z,j_X,k")->required();

    auto* exponent = app.add_subcommand("exponent", "sample an exponent function as CSV");
    std::string x_triple, x_what = "envelope";
    std::size_t x_points = 256;
    double x_delta = 0.0;
    std::string x_mode = "trial";
    exponent->add_option("--triple", x_triple, "j_Z,j_X,k")->required();
    exponent->add_option("--what", x_what, "wo | gz | envelope")
        ->check(CLI::IsMember({"wo", "gz", "envelope"}));
    exponent->add_option("--points", x_points);
    exponent->add_option("--delta", x_delta, "delta_bar for gz");
    exponent->add_option("--mode", x_mode, "W_o mode: trial | infimum")
        ->check(CLI::IsMember({"trial", "infimum"}));

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    auto need_seed = [&](bool set) {
        if (g.strict && !set)
            throw domain_violation("--strict requires an explicit --seed");
    };

    if (*sample) {
        need_seed(s_seed_set);
        SamplerConfig cfg;
        cfg.seed = s_seed;
        cfg.mode = s_simple ? SampleMode::SimpleGraph : SampleMode::Mod2Multigraph;
        write_out(g, to_f2m_string(sample_regular(s_j, s_krow, s_n, cfg, s_stream)));
        return 0;
    }

    if (*build) {
        need_seed(b_seed_set);
        if (b_prof.k_Delta == 0) b_prof.k_Delta = b_prof.k_Z;
        SamplerConfig cfg;
        cfg.seed = b_seed;
        cfg.mode = b_simple ? SampleMode::SimpleGraph : SampleMode::Mod2Multigraph;
        const FamilyInstance inst = build_instance(b_prof, cfg);
        json rep = meta_json(g, b_seed);
        rep["shapes"] = {{"A_Z", {inst.A_Z.rows(), inst.A_Z.cols()}},
                         {"A_Delta", {inst.A_Delta.rows(), inst.A_Delta.cols()}},
                         {"A_X", {inst.A_X.rows(), inst.A_X.cols()}},
                         {"B", {inst.B.rows(), inst.B.cols()}}};
        const ExtendedPair ext = extended_matrices(inst);
        rep["extended"] = {{"H_Z_ext", {ext.H_Z_ext.rows(), ext.H_Z_ext.cols()}},
                           {"H_X_ext", {ext.H_X_ext.rows(), ext.H_X_ext.cols()}},
                           {"nnz_H_Z_ext", ext.H_Z_ext.nnz()},
                           {"nnz_H_X_ext", ext.H_X_ext.nnz()}};
        const CompressedPair cp = compressed_pair(inst);
        rep["compressed"] = {{"H_Z", {cp.H_Z.rows(), cp.H_Z.cols()}},
                             {"H_X", {cp.H_X.rows(), cp.H_X.cols()}},
                             {"rank_H_Z", rank(cp.H_Z)},
                             {"rank_H_X", rank(cp.H_X)}};
        rep["rates"] = rate_report_json(rate_report(inst));
        rep["css_ok"] = verify_css(inst).ok;
        if (b_distances) rep["distances"] = distance_json(brute_distances(inst));
        if (b_matrices) {
            rep["matrices"] = {{"A_Z", to_f2m_string(inst.A_Z)},
                               {"A_Delta", to_f2m_string(inst.A_Delta)},
                               {"B", to_f2m_string(inst.B)},
                               {"H_Z", to_f2m_string(cp.H_Z)},
                               {"H_X", to_f2m_string(cp.H_X)}};
        }
        write_out(g, rep.dump(2) + "\n");
        return 0;
    }

    if (*verify) {
        need_seed(v_seed_set);
        if (v_prof.k_Delta == 0) v_prof.k_Delta = v_prof.k_Z;
        SamplerConfig cfg;
        cfg.seed = v_seed;
        const FamilyInstance inst = build_instance(v_prof, cfg);
        const CssCheck css = verify_css(inst);
        json rep = meta_json(g, v_seed);
        rep["css_ok"] = css.ok;
        if (css.counterexample_row) rep["counterexample_row"] = *css.counterexample_row;
        // Theorem-2.3 spot check with a random syndrome pair.
        const CompressedPair cp = compressed_pair(inst, false);
        Xoshiro256pp rng(v_seed ^ 0xABCDEF);
        BitMatrix s_Z(1, rank(cp.H_Z)), s_X(1, cp.K_X.rows());
        for (std::size_t c = 0; c < s_Z.cols(); ++c) s_Z.set(0, c, rng.next() & 1);
        for (std::size_t c = 0; c < s_X.cols(); ++c) s_X.set(0, c, rng.next() & 1);
        const AffineSystems sys = affine_systems(inst, s_Z, s_X);
        bool affine_ok = true;
        const BitMatrix kz = kernel_basis(inst.A_Z);
        for (int it = 0; it < 32 && affine_ok; ++it) {
            BitMatrix coeff(1, kz.rows());
            for (std::size_t c = 0; c < kz.rows(); ++c) coeff.set(0, c, rng.next() & 1);
            const BitMatrix e = z_error_from_witness(inst, sys, mul(coeff, kz));
            affine_ok = vec_apply(sys.H_Z_red, e) == s_Z;
        }
        rep["affine_forward_ok"] = affine_ok;
        write_out(g, rep.dump(2) + "\n");
        return css.ok && affine_ok ? 0 : 3;
    }

    if (*enumc) {
        std::ostringstream os;
        os << csv_metadata_line(emit_options(g, 0));
        if (e_op == "outer") {
            os << "s,value,approx\n";
            for (std::size_t s = 0; s <= e_n; ++s) {
                const Rat v = outer_enum(e_n, e_jz, e_k, s);
                os << s << ',' << rat_string(v) << ',' << fmt_g(rat_double(v)) << '\n';
            }
        } else if (e_op == "kernel") {
            os << "s,l,value,approx\n";
            for (std::size_t s = 0; s <= e_n; ++s)
                for (std::size_t l = 0; l <= e_n; ++l) {
                    const Rat v = transition_kernel(e_n, e_k, s, l);
                    if (v != 0)
                        os << s << ',' << l << ',' << rat_string(v) << ','
                           << fmt_g(rat_double(v)) << '\n';
                }
        } else if (e_op == "habound") {
            os << "l,value,approx\n";
            for (std::size_t l = 0; l <= e_n; ++l) {
                const Rat v = ha_mean_bound(e_n, e_jz, e_k, l);
                os << l << ',' << rat_string(v) << ',' << fmt_g(rat_double(v)) << '\n';
            }
        } else {
            const StackedShape shape{e_jz, e_jd, e_k};
            const std::size_t mz = e_jz * e_n / e_k, md = e_jd * e_n / e_k;
            const SyndromeType syn = e_allones ? SyndromeType::AllOnes : SyndromeType::Even;
            os << "t1,td,w,value,approx\n";
            for (std::size_t t1 = 0; t1 <= mz; ++t1)
                for (std::size_t td = 0; td <= md; ++td)
                    for (std::size_t w = 0; w <= (e_op == "ndep" ? 0 : e_n); ++w) {
                        const Rat v = stacked_mean(shape, e_n, t1, td, w, syn);
                        if (v != 0)
                            os << t1 << ',' << td << ',' << w << ',' << rat_string(v)
                               << ',' << fmt_g(rat_double(v)) << '\n';
                    }
        }
        write_out(g, os.str());
        return 0;
    }

    if (*oracle) {
        need_seed(o_seed_set);
        const DegreeProfile p{o_jz, o_k, o_jd, o_k, o_k, o_n};
        const StackedShape shape = StackedShape::of(p);
        const Rat exact = stacked_mean(shape, o_n, o_t1, o_td, o_w);
        const RowCounts rc = row_counts(p);
        const Rat supports = binom(rc.m_Z, o_t1) * binom(rc.m_Delta, o_td) * binom(o_n, o_w);
        const double prob = rat_double(exact / supports);
        const McResult mc = mc_support_prob(p, o_t1, o_td, o_w, o_samples, o_seed);
        const double sigma = std::sqrt(prob * (1.0 - prob) / double(o_samples));
        const bool ok = std::fabs(mc.estimate - prob) <= 3.0 * sigma;
        json rep = meta_json(g, o_seed);
        rep["query"] = {{"t1", o_t1}, {"td", o_td}, {"w", o_w}};
        rep["exact"] = rat_json(exact);
        rep["exact_probability"] = prob;
        rep["estimate"] = mc.estimate;
        rep["std_error"] = mc.std_error;
        rep["sigma_exact"] = sigma;
        rep["within_3_sigma"] = ok;
        write_out(g, rep.dump(2) + "\n");
        return ok ? 0 : 3;
    }

    if (*certify) {
        json rep = meta_json(g, 0);
        json certs = json::array();
        bool all_ok = true;
        auto push = [&](const Certificate& c) {
            certs.push_back(certificate_json(c));
            all_ok = all_ok && c.status == CertStatus::Certified;
        };
        if (c_psi) {
            push(psi_certify(c_psi));
        } else if (c_boundary) {
            const BoundaryCertificates b = boundary_certify(c_boundary);
            push(b.ha);
            push(b.mn);
        } else if (c_all) {
            for (const auto& r : table_d1)
                push(ha_certify({r.j_Z, r.j_X, r.k}, r.beta_Z, r.delta_bar, r.eps_Z));
            for (const auto& r : table_e1)
                push(mn_certify({r.j_Z, r.j_X, r.k}, r.beta_X, r.eps_X));
            for (const auto& r : table_f1) {
                const BoundaryCertificates b = boundary_certify(r.j);
                push(b.ha);
                push(b.mn);
            }
        } else if (!c_triple.empty()) {
            const BalancedTriple t = parse_triple(c_triple);
            if (c_tables || (c_beta_z == 0 && c_beta_x == 0)) {
                if (t.boundary()) {
                    const BoundaryCertificates b = boundary_certify(t.j_Z);
                    push(b.ha);
                    push(b.mn);
                } else {
                    const auto dz = find_d1(t);
                    const auto ex = find_e1(t);
                    if (!dz || !ex)
                        throw domain_violation("no published constants for " + t.str());
                    push(ha_certify(t, dz->beta_Z, dz->delta_bar, dz->eps_Z));
                    push(mn_certify(t, ex->beta_X, ex->eps_X));
                }
            } else {
                if (c_beta_z > 0 && c_delta_bar > 0)
                    push(ha_certify(t, c_beta_z, c_delta_bar));
                if (c_beta_x > 0) push(mn_certify(t, c_beta_x));
            }
        } else {
            throw domain_violation("certify: need --triple, --psi, --boundary or --all-tables");
        }
        rep["certificates"] = certs;
        rep["all_certified"] = all_ok;
        write_out(g, rep.dump(2) + "\n");
        return all_ok ? 0 : 4;
    }

    if (*scan) {
        ClassifyOptions co;
        co.with_proxies = !sc_no_proxies;
        if (!sc_triple.empty()) {
            const ScanRecord rec = classify(parse_triple(sc_triple), co);
            write_out(g, scan_record_json(rec).dump(2) + "\n");
            return 0;
        }
        if (!sc_window) throw domain_violation("scan: need --window or --triple");
        const std::vector<ScanRecord> recs = scan_window(co, g.threads);
        if (sc_json) {
            json arr = json::array();
            for (const auto& r : recs) arr.push_back(scan_record_json(r));
            json rep = meta_json(g, 0);
            rep["records"] = arr;
            write_out(g, rep.dump(2) + "\n");
        } else {
            write_out(g, emit_scan_csv(recs, emit_options(g, 0)));
        }
        return 0;
    }

    if (*figure) {
        const std::vector<ScanRecord> recs = scan_window({}, g.threads);
        write_out(g, emit_figure_data(recs, emit_options(g, 0)));
        return 0;
    }

    if (*tables) {
        const TableId id = t_which == "D" ? TableId::D : t_which == "E" ? TableId::E : TableId::F;
        write_out(g, emit_table(id, emit_options(g, 0), {}, g.threads));
        return 0;
    }

    if (*proxy) {
        const BalancedTriple t = parse_triple(p_triple);
        json rep = meta_json(g, 0);
        rep["triple"] = triple_json(t);
        rep["proxy_Z"] = proxy_delta_Z(t);
        rep["proxy_X"] = proxy_delta_X(t);
        rep["proxy_min"] = std::min(rep["proxy_Z"].get<double>(), rep["proxy_X"].get<double>());
        rep["gv_classical"] = binary_entropy_inv(t.alpha_Z());
        rep["gv_css"] = binary_entropy_inv(double(t.j_Z) / t.k);
        rep["wo_mode"] = "infimum";
        write_out(g, rep.dump(2) + "\n");
        return 0;
    }

    if (*exponent) {
        const BalancedTriple t = parse_triple(x_triple);
        const WoMode mode = x_mode == "trial" ? WoMode::Trial : WoMode::Infimum;
        std::ostringstream os;
        os << csv_metadata_line(emit_options(g, 0));
        if (x_what == "wo") {
            os << "tau,W_o_" << x_mode << "\n";
            for (std::size_t i = 0; i <= x_points; ++i) {
                const double tau = double(i) / double(x_points);
                os << fmt_g(tau) << ',' << fmt_g(outer_exponent(tau, t.j_Z, t.k, mode)) << '\n';
            }
        } else if (x_what == "gz") {
            if (x_delta <= 0.0) throw domain_violation("exponent --what gz needs --delta");
            os << "tau,G_Z\n";
            for (std::size_t i = 0; i <= x_points; ++i) {
                const double tau = 0.4999 * double(i) / double(x_points);
                os << fmt_g(tau) << ',' << fmt_g(ha_G(tau, x_delta, t.j_Z, t.k)) << '\n';
            }
        } else {
            os << "omega,W_Z_ub_" << x_mode << ",X_envelope\n";
            for (std::size_t i = 1; i <= x_points; ++i) {
                const double w = 0.5 * double(i) / double(x_points);
                os << fmt_g(w) << ',' << fmt_g(ha_envelope(w, t.j_Z, t.k, mode)) << ','
                   << fmt_g(x_envelope(w, t)) << '\n';
            }
        }
        write_out(g, os.str());
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const cssgv::error& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
}
