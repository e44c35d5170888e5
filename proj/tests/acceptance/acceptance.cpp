// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include "cssgv/css.hpp"
#include "cssgv/f2m.hpp"
#include "cssgv/scan.hpp"

using namespace cssgv;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    bool ok = true;
    std::string detail;
    Clock::time_point start = Clock::now();

    explicit Criterion(int i) : id(i) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    void finish(const std::string& label) {
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("criterion %2d: %s  [%7.2f s]  %s%s%s\n", id, ok ? "PASS" : "FAIL",
                    secs, label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double ulp5(double v) { return std::pow(10.0, std::floor(std::log10(v)) - 4.0); }

// Exhaustive socket-count oracle for N_o (independent of the generating
// function route): enumerate all (j s)-subsets of the row-socket pool.
Rat no_socket_oracle(std::size_t n, unsigned j, unsigned k, std::size_t s) {
    const std::size_t sockets = j * n;
    const std::size_t active = j * s;
    Int favorable = 0, total = 0;
    for (std::uint32_t mask = 0; mask < (1u << sockets); ++mask) {
        if (std::popcount(mask) != static_cast<int>(active)) continue;
        ++total;
        bool even = true;
        for (std::size_t r = 0; r < sockets / k && even; ++r) {
            int cnt = 0;
            for (unsigned b = 0; b < k; ++b)
                if (mask & (1u << (r * k + b))) ++cnt;
            even = cnt % 2 == 0;
        }
        if (even) ++favorable;
    }
    return make_rat(binom(n, s) * favorable, total);
}

std::vector<ScanRecord> g_scan_records; // criterion 4 output, reused by 11

void criterion1() {
    Criterion c(1);
    for (const auto& r : table_d1) {
        const BalancedTriple t{r.j_Z, r.j_X, r.k};
        const CertConstants cc = certified_constants(t, r.beta_Z, r.delta_bar, 0.1);
        c.require(std::fabs(cc.lambda_Z - r.lambda_Z) < 1e-9,
                  "lambda_Z mismatch at " + t.str());
        const Certificate cert = ha_certify(t, r.beta_Z, r.delta_bar, r.eps_Z);
        c.require(cert.status == CertStatus::Certified, "HA not certified at " + t.str());
        c.require(cert.margin >= 0.9 * r.eps_Z, "HA margin below 0.9 eps at " + t.str());
    }
    c.finish("Table D.1: lambda_Z to 9 decimals + HA certification, 56 rows");
}

void criterion2() {
    Criterion c(2);
    for (const auto& r : table_e1) {
        const BalancedTriple t{r.j_Z, r.j_X, r.k};
        const CertConstants cc = certified_constants(t, 0.1, 0.1, r.beta_X);
        c.require(std::fabs(cc.B_X - r.B_X) <= 0.6 * ulp5(r.B_X),
                  "B_X mismatch at " + t.str());
        const Certificate cert = mn_certify(t, r.beta_X, r.eps_X);
        c.require(cert.status == CertStatus::Certified, "MN not certified at " + t.str());
        c.require(cert.margin >= 0.9 * r.eps_X, "MN margin below 0.9 eps at " + t.str());
    }
    const double oc1 = certified_constants({5, 9, 14}, 0.1, 0.1, 0.10).odd_corner;
    const double oc2 = certified_constants({5, 17, 22}, 0.1, 0.1, 0.10).odd_corner;
    c.require(std::fabs(oc1 - (-1.01033)) <= 1e-4, "odd corner (5,9,14)");
    c.require(std::fabs(oc2 - (-1.21158)) <= 1e-4, "odd corner (5,17,22)");
    c.finish("Table E.1: B_X to 5 significant digits + MN certification, 56 rows");
}

void criterion3() {
    Criterion c(3);
    for (const auto& r : table_f1) {
        const BalancedTriple t{r.j, r.j, 2 * r.j};
        const BoundaryCertificates b = boundary_certify(r.j);
        c.require(b.ha.status == CertStatus::Certified, "HA at j=" + std::to_string(r.j));
        c.require(b.mn.status == CertStatus::Certified, "MN at j=" + std::to_string(r.j));
        c.require(b.ha.margin >= 0.9 * r.eps_Z, "HA margin at j=" + std::to_string(r.j));
        c.require(b.mn.margin >= 0.9 * r.eps_X, "MN margin at j=" + std::to_string(r.j));
        c.require(std::fabs(b.ha.constants.lambda_Z - r.lambda_Z) < 1e-9,
                  "lambda_Z at j=" + std::to_string(r.j));
        c.require(std::fabs(b.mn.constants.B_X - r.B_X) <= 0.6 * ulp5(r.B_X),
                  "B_X at j=" + std::to_string(r.j));
    }
    const BoundaryCertificates b3 = boundary_certify(3);
    c.require(b3.mn.status == CertStatus::Failed && b3.mn.constants.B_X >= 1.0,
              "(3,3,6) should fail with B_X >= 1");
    double worst = -1e9;
    for (unsigned j : {5u, 7u, 9u, 11u, 13u, 15u}) {
        const auto row = find_f1(j);
        const CertConstants cc =
            certified_constants({j, j, 2 * j}, row->beta_Z, row->delta_bar, row->beta_X, true);
        worst = std::max(worst, cc.odd_corner);
    }
    c.require(std::fabs(worst - (-0.79268)) <= 1e-4, "worst boundary odd corner");
    c.finish("Table F.1: 12 boundary rows certified; (3,3,6) fails with B_X >= 1");
}

void criterion4() {
    Criterion c(4);
    g_scan_records = scan_window({}, 1);
    std::size_t certified = 0;
    for (const auto& r : g_scan_records) {
        const bool expect = r.triple.k % 2 == 0 && r.triple.j_Z >= 4;
        c.require((r.category == Category::CertifiedGV) == expect,
                  "CertifiedGV characterization at " + r.triple.str());
        if (r.category == Category::CertifiedGV) ++certified;
        if (r.triple.j_Z <= 2)
            c.require(r.category == Category::ZeroProxy,
                      "j_Z <= 2 not ZeroProxy at " + r.triple.str());
        if (r.triple.j_Z == 3 && r.triple.k == 7)
            c.require(r.category == Category::NearGV, "(3,4,7) not NearGV");
    }
    c.require(certified == 56, "certified count " + std::to_string(certified) + " != 56");
    c.finish("scan: CertifiedGV = {even k, j_Z >= 4}, j_Z <= 2 ZeroProxy, (3,4,7) NearGV");
}

void criterion5() {
    Criterion c(5);
    for (auto [n, k] : std::vector<std::pair<std::size_t, unsigned>>{
             {8, 2}, {8, 4}, {12, 4}, {10, 6}}) {
        for (std::size_t s = 0; s <= n; ++s) {
            Rat sum(0);
            for (std::size_t l = 0; l <= n; ++l) sum += transition_kernel(n, k, s, l);
            c.require(sum == Rat(1), "kernel row sum at n=" + std::to_string(n));
        }
    }
    for (std::size_t s = 0; s <= 8; ++s)
        c.require(outer_enum(8, 2, 4, s) == outer_enum(8, 2, 4, 8 - s), "N_o symmetry");
    for (std::size_t s = 0; s <= 12; ++s)
        c.require(outer_enum(12, 3, 6, s) == outer_enum(12, 3, 6, 12 - s), "N_o symmetry 6");
    const StackedShape shape{2, 2, 4};
    for (std::size_t n : {4, 8}) {
        const std::size_t mz = n / 2, md = n / 2;
        for (std::size_t t1 = 0; t1 <= mz; ++t1)
            for (std::size_t td = 0; td <= md; ++td)
                for (std::size_t w = 0; w <= n; ++w) {
                    const Rat v = stacked_mean(shape, n, t1, td, w);
                    c.require(v == stacked_mean(shape, n, mz - t1, td, w), "fold t1");
                    c.require(v == stacked_mean(shape, n, t1, md - td, w), "fold td");
                }
    }
    c.finish("exact identities: kernel row sums, N_o symmetry, stacked fold symmetry");
}

void criterion6() {
    Criterion c(6);
    c.require(outer_enum(4, 2, 4, 1) == make_rat(12, 7), "N_o(1) != 12/7");
    c.require(outer_enum(4, 2, 4, 2) == make_rat(114, 35), "N_o(2) != 114/35");
    c.require(outer_enum(4, 2, 4, 1) == no_socket_oracle(4, 2, 4, 1), "socket oracle s=1");
    c.require(outer_enum(4, 2, 4, 2) == no_socket_oracle(4, 2, 4, 2), "socket oracle s=2");

    const DegreeProfile p{2, 4, 2, 4, 4, 4};
    const StackedShape shape = StackedShape::of(p);
    struct Q { std::size_t t1, td, w; };
    const std::vector<Q> queries = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 1, 2}, {0, 0, 2}};
    std::size_t within = 0;
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const Q q = queries[qi];
        const Rat exact = stacked_mean(shape, 4, q.t1, q.td, q.w);
        const Rat supports = binom(2, q.t1) * binom(2, q.td) * binom(4, q.w);
        const double prob = rat_double(exact / supports);
        const McResult mc = mc_support_prob(p, q.t1, q.td, q.w, 1000000, 9000 + qi);
        const double sigma = std::sqrt(prob * (1.0 - prob) / 1e6);
        if (std::fabs(mc.estimate - prob) <= 3.0 * sigma) ++within;
    }
    c.require(within == queries.size(),
              std::to_string(within) + "/5 queries within 3 sigma");
    c.finish("oracle agreement: MC at 10^6 samples on 5 query points + socket oracle");
}

void criterion7() {
    Criterion c(7);
    const DegreeProfile example21{3, 8, 2, 8, 2, 40};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SamplerConfig cfg;
        cfg.seed = seed;
        const FamilyInstance inst = build_instance(example21, cfg);
        c.require(verify_css(inst).ok, "verify_css at seed " + std::to_string(seed));
        const RateReport rep = rate_report(inst);
        c.require(rep.L_X <= rep.L_Z, "L_X > L_Z");
        c.require(rep.R_Z_des == make_rat(5, 8) && rep.R_X_des == make_rat(5, 8) &&
                      rep.R_Q_des == make_rat(1, 4),
                  "design rates");
        c.require(rep.R_Q == rep.R_X + rep.R_Z - 1, "R_Q identity");
        const std::size_t dim_cz =
            row_basis(mul(kernel_basis(inst.A_Z), inst.B.transpose())).rows();
        c.require(dim_cz == 40 - rep.rank_AZ - rep.L_Z, "dim C_Z identity");
        const CompressedPair cp = compressed_pair(inst, false);
        const std::size_t dim_cx = kernel_basis(cp.H_X).rows();
        c.require(dim_cx == rep.rank_AX + rep.L_X, "dim C_X identity");
    }

    // Theorem-2.3 equivalence: exhaustive at n = 16.
    {
        const DegreeProfile p16{3, 8, 2, 8, 2, 16};
        SamplerConfig cfg;
        cfg.seed = 7;
        const FamilyInstance inst = build_instance(p16, cfg);
        const CompressedPair cp = compressed_pair(inst, false);
        Xoshiro256pp rng(606);
        BitMatrix s_Z(1, rank(cp.H_Z)), s_X(1, cp.K_X.rows());
        for (std::size_t i = 0; i < s_Z.cols(); ++i) s_Z.set(0, i, rng.next() & 1);
        for (std::size_t i = 0; i < s_X.cols(); ++i) s_X.set(0, i, rng.next() & 1);
        const AffineSystems sys = affine_systems(inst, s_Z, s_X);
        bool z_ok = true, x_ok = true;
        for (std::uint32_t bits = 0; bits <= 0xFFFFu; ++bits) {
            BitMatrix e(1, 16);
            for (std::size_t i = 0; i < 16; ++i) e.set(0, i, (bits >> i) & 1u);
            if ((vec_apply(sys.H_Z_red, e) == s_Z) != z_witness(inst, sys, e).has_value())
                z_ok = false;
            if ((vec_apply(cp.H_X, e) == s_X) != x_witness(inst, sys, e).has_value())
                x_ok = false;
        }
        c.require(z_ok, "Thm 2.3 Z-side exhaustive");
        c.require(x_ok, "Thm 2.3 X-side exhaustive");
    }

    // Spot check at n = 40: both directions on random vectors.
    {
        SamplerConfig cfg;
        cfg.seed = 17;
        const FamilyInstance inst = build_instance(example21, cfg);
        const CompressedPair cp = compressed_pair(inst, false);
        Xoshiro256pp rng(707);
        BitMatrix s_Z(1, rank(cp.H_Z)), s_X(1, cp.K_X.rows());
        for (std::size_t i = 0; i < s_Z.cols(); ++i) s_Z.set(0, i, rng.next() & 1);
        for (std::size_t i = 0; i < s_X.cols(); ++i) s_X.set(0, i, rng.next() & 1);
        const AffineSystems sys = affine_systems(inst, s_Z, s_X);
        const BitMatrix kz = kernel_basis(inst.A_Z);
        for (int it = 0; it < 100; ++it) {
            BitMatrix coeff(1, kz.rows());
            for (std::size_t i = 0; i < kz.rows(); ++i) coeff.set(0, i, rng.next() & 1);
            const BitMatrix e = z_error_from_witness(inst, sys, mul(coeff, kz));
            c.require(vec_apply(sys.H_Z_red, e) == s_Z, "n=40 forward");
            c.require(z_witness(inst, sys, e).has_value(), "n=40 backward witness");
        }
        for (int it = 0; it < 100; ++it) {
            BitMatrix e(1, 40);
            for (std::size_t i = 0; i < 40; ++i) e.set(0, i, rng.next() & 1);
            const bool solves = vec_apply(cp.H_X, e) == s_X;
            c.require(solves == x_witness(inst, sys, e).has_value(), "n=40 X equivalence");
        }
    }
    c.finish("instance algebra: 100 seeded instances + Thm 2.3 equivalence");
}

void criterion8() {
    Criterion c(8);
    const std::size_t n = 8, samples = 10000;
    const DegreeProfile p{2, 4, 0, 0, 4, n};
    std::vector<std::vector<double>> acc(n + 1);
    for (std::uint64_t seed = 0; seed < samples; ++seed) {
        SamplerConfig cfg;
        cfg.seed = seed;
        const FamilyInstance inst = build_instance(p, cfg);
        const auto table = brute_weight_enum(inst, WeightTarget::C_Z);
        for (std::size_t l = 0; l <= n; ++l) acc[l].push_back(double(table[l]));
    }
    for (std::size_t l = 0; l <= n; ++l) {
        const double mean =
            std::accumulate(acc[l].begin(), acc[l].end(), 0.0) / double(samples);
        double var = 0;
        for (double v : acc[l]) var += (v - mean) * (v - mean);
        var /= double(samples - 1);
        const double se = std::sqrt(var / double(samples));
        const double bound = rat_double(ha_mean_bound(n, 2, 4, l));
        c.require(mean <= bound + 3.0 * se,
                  "l=" + std::to_string(l) + " mean " + std::to_string(mean) +
                      " exceeds bound " + std::to_string(bound));
    }
    c.finish("first-moment domination: mean A_CZ(l) <= N_Z^ub(l) + 3 SE, 10^4 instances");
}

void criterion9() {
    Criterion c(9);
    const BalancedTriple t{4, 6, 10};
    auto rate_devs = [&](std::size_t n) {
        std::vector<double> dz, dq;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            SamplerConfig cfg;
            cfg.seed = 1000 + seed;
            const FamilyInstance inst = build_instance(t.profile(n), cfg);
            const RateReport rep = rate_report(inst);
            dz.push_back(std::fabs(rat_double(rep.R_Z) - 0.6));
            dq.push_back(std::fabs(rat_double(rep.R_Q) - 0.2));
        }
        return std::make_pair(median(dz), median(dq));
    };
    const auto [mz100, mq100] = rate_devs(100);
    const auto [mz1000, mq1000] = rate_devs(1000);
    // For this all-even triple the A_Z row relation cancels exactly against
    // the structural kernel overlap, so |R_Z - 0.6| is identically zero at
    // both sizes: the median sits on its floor and cannot strictly
    // decrease. Accept either a strict decrease or exact convergence at
    // both sizes (any nonzero deviation re-engages the strict comparison).
    c.require(mz1000 < mz100 || (mz100 == 0.0 && mz1000 == 0.0),
              "median |R_Z - 0.6| neither decreasing nor exactly converged");
    c.require(mq1000 < mq100, "median |R_Q - 0.2| not decreasing");

    auto kerb_frac = [&](std::size_t n) {
        std::vector<double> fr;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            SamplerConfig cfg;
            cfg.seed = 2000 + seed;
            const BitMatrix b = sample_square(4, n, cfg, seed);
            fr.push_back(double(n - rank(b)) / double(n));
        }
        return median(fr);
    };
    const double kb100 = kerb_frac(100), kb2000 = kerb_frac(2000);
    c.require(kb2000 < kb100, "dim Ker B / n not decreasing");
    c.finish("rate-convergence trend: n=100 -> n=1000 rates, n=100 -> n=2000 Ker B");
}

void criterion10() {
    Criterion c(10);
    for (unsigned k = 3; k <= 30; ++k) {
        const Certificate cert = psi_certify(k);
        c.require(cert.status == CertStatus::Certified, "Psi_" + std::to_string(k));
        c.require(psi(0.0, k) == 0.0 && psi(1.0, k) == 0.0,
                  "endpoints at k=" + std::to_string(k));
    }
    c.finish("Psi_k certification for k = 3..30 with exact endpoint zeros");
}

void criterion11() {
    Criterion c(11);
    const double gv = binary_entropy_inv(0.4);
    c.require(gv < 0.07938261, "h2^{-1}(0.4) not strictly below delta_bar");
    double proxy_min = 0.0;
    bool found = false;
    for (const auto& r : g_scan_records)
        if (r.triple.j_Z == 4 && r.triple.k == 10) {
            proxy_min = r.proxy_min;
            found = true;
        }
    if (!found) proxy_min = rightmost_zero(ProxySide::Min, BalancedTriple{4, 6, 10});
    c.require(std::fabs(proxy_min - gv) <= 0.02 * gv,
              "proxy " + std::to_string(proxy_min) + " vs gv " + std::to_string(gv));
    c.finish("proxy fidelity: delta-hat(4,6,10) within 2% of h2^{-1}(0.4) < delta_bar");
}

void criterion12() {
    Criterion c(12);
    // identical table emissions
    EmitOptions eo;
    for (TableId id : {TableId::D, TableId::E, TableId::F})
        c.require(emit_table(id, eo) == emit_table(id, eo), "table emission differs");
    // identical sampled matrices across repeat runs
    SamplerConfig cfg;
    cfg.seed = 4242;
    c.require(to_f2m_string(sample_regular(3, 6, 24, cfg)) ==
                  to_f2m_string(sample_regular(3, 6, 24, cfg)),
              "sample not reproducible");
    // identical Monte Carlo estimates
    const DegreeProfile p{2, 4, 2, 4, 4, 4};
    c.require(mc_support_prob(p, 1, 0, 1, 20000, 5).estimate ==
                  mc_support_prob(p, 1, 0, 1, 20000, 5).estimate,
              "MC not reproducible");
    // identical certified bounds
    c.require(ha_certify({4, 6, 10}, 0.25, 0.07938261, 1.4335e-6).certified_sup_bound ==
                  ha_certify({4, 6, 10}, 0.25, 0.07938261, 1.4335e-6).certified_sup_bound,
              "HA bound not reproducible");
    c.require(psi_certify(12).certified_sup_bound == psi_certify(12).certified_sup_bound,
              "Psi bound not reproducible");
    // scan classification independent of thread count
    ClassifyOptions co;
    co.with_proxies = true;
    std::vector<BalancedTriple> subset = {{4, 6, 10}, {2, 8, 10}, {5, 7, 12}};
    std::vector<ScanRecord> r1(subset.size()), r3(subset.size());
    parallel_for(subset.size(), 1, [&](std::size_t i) { r1[i] = classify(subset[i], co); });
    parallel_for(subset.size(), 3, [&](std::size_t i) { r3[i] = classify(subset[i], co); });
    auto same_bound = [](double a, double b) {
        return a == b || (std::isnan(a) && std::isnan(b)); // refused: no bound
    };
    for (std::size_t i = 0; i < subset.size(); ++i) {
        c.require(r1[i].proxy_min == r3[i].proxy_min, "proxy differs across threads");
        c.require(r1[i].category == r3[i].category, "category differs across threads");
        c.require(same_bound(r1[i].certificates[0].certified_sup_bound,
                             r3[i].certificates[0].certified_sup_bound) &&
                      same_bound(r1[i].certificates[1].certified_sup_bound,
                                 r3[i].certificates[1].certified_sup_bound),
                  "bound differs across threads");
    }
    c.finish("determinism: identical outputs across reruns and thread counts");
}

} // namespace

int main() {
    std::printf("cssgv acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (failures == 0) {
        std::printf("all 12 criteria PASS\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
