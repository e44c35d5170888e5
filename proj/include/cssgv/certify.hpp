#ifndef CSSGV_CERTIFY_HPP
#define CSSGV_CERTIFY_HPP

#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "cssgv/boxfn.hpp"
#include "cssgv/exponents.hpp"
#include "cssgv/interval.hpp"
#include "cssgv/published.hpp"

namespace cssgv {

enum class CertStatus { Certified, Failed, Refused };

inline const char* status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Failed: return "Failed";
        case CertStatus::Refused: return "Refused";
    }
    return "?";
}

struct Certificate {
    BalancedTriple triple{};
    std::string side;   // HA, MN, Boundary-HA, Boundary-MN, Psi
    std::string region;
    double threshold = 0.0;
    double certified_sup_bound = std::numeric_limits<double>::quiet_NaN();
    double margin = 0.0; // -certified_sup_bound for 0-threshold-form bounds
    std::size_t boxes_processed = 0;
    std::size_t max_depth = 0;
    CertStatus status = CertStatus::Failed;
    std::string reason;
    CertConstants constants{};
    double published_eps = 0.0;
    double min_width = 0.0;
    std::size_t max_boxes = 0;
};

struct SupOptions {
    double min_width = 1e-9;
    std::size_t max_boxes = 10'000'000;
};

// ---------------------------------------------------------------------------
// Worklist subdivision: pop a box, bound it with ienclose; accept if the
// upper bound clears the threshold, otherwise split along the widest
// dimension. A box's fate depends only on the box itself, so the processed
// set forms a deterministic tree and the certified bound (an associative
// max) is independent of processing order and thread count.
// ---------------------------------------------------------------------------
inline Certificate sup_certify(FnId fn, const FnParams& fp,
                               const std::vector<BoxND>& region, double threshold,
                               const SupOptions& opt = {}) {
    Certificate cert;
    cert.side = fn_name(fn);
    cert.threshold = threshold;
    cert.min_width = opt.min_width;
    cert.max_boxes = opt.max_boxes;
    if (region.empty()) throw domain_violation("sup_certify: empty region");

    struct Item {
        BoxND box;
        std::size_t depth;
    };
    std::vector<Item> work;
    for (const auto& b : region) work.push_back({b, 0});

    double sup_bound = -std::numeric_limits<double>::infinity();
    while (!work.empty()) {
        const Item it = work.back();
        work.pop_back();
        ++cert.boxes_processed;
        cert.max_depth = std::max(cert.max_depth, it.depth);
        if (cert.boxes_processed > opt.max_boxes) {
            cert.status = CertStatus::Failed;
            cert.reason = "box budget exhausted with bound above threshold";
            cert.certified_sup_bound = std::numeric_limits<double>::infinity();
            return cert;
        }
        const double ub = ienclose(fn, it.box, fp).hi;
        if (ub <= threshold) {
            sup_bound = std::max(sup_bound, ub);
            continue;
        }
        if (it.box.max_width() < opt.min_width) {
            cert.status = CertStatus::Failed;
            cert.reason = "box width underflow with bound above threshold";
            cert.certified_sup_bound = ub;
            return cert;
        }
        const std::size_t d = it.box.widest();
        const Interval iv = it.box.dims[d];
        const double mid = iv.mid();
        BoxND left = it.box, right = it.box;
        left.dims[d] = Interval(iv.lo, mid);
        right.dims[d] = Interval(mid, iv.hi);
        work.push_back({right, it.depth + 1});
        work.push_back({left, it.depth + 1});
    }
    cert.status = CertStatus::Certified;
    cert.certified_sup_bound = sup_bound;
    cert.margin = -sup_bound;
    return cert;
}

namespace detail {

// Try thresholds at descending multiples of the reference margin; keeps
// the reported margin at or above the published value whenever the true
// sup allows it, and falls back to the 0.9 acceptance tier otherwise.
inline Certificate tiered_sup_certify(FnId fn, const FnParams& fp,
                                      const std::vector<BoxND>& region,
                                      double reference_eps, const SupOptions& opt) {
    static constexpr double tiers[] = {1.05, 1.0, 0.9};
    Certificate last;
    for (double tier : tiers) {
        last = sup_certify(fn, fp, region, -tier * reference_eps, opt);
        if (last.status == CertStatus::Certified) return last;
    }
    return last;
}

inline std::string fmt_interval(double lo, double hi) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "[%.9g, %.9g]", lo, hi);
    return buf;
}

} // namespace detail

// ---------------------------------------------------------------------------
// HA-side certification (Appendix D pipeline). Steps, in order:
//   refusals: odd k (complement symmetry unavailable), j_Z < 4;
//   (1) h2(delta_bar) > alpha_Z,
//   (2) q(beta_Z/k) > delta_bar with q(tau) = (1-(1-2 tau)^k)/2,
//   (3) lambda_Z = beta_Z k / e < 1,
//   (4) sup of G_{Z,delta_bar} over [beta_Z/k, 0.49] below -eps,
//   (5) analytic tail (1+alpha_Z) 0.02^{k-2} <= 1/2 covering [0.49, 1/2].
// ---------------------------------------------------------------------------
inline Certificate ha_certify(const BalancedTriple& t, double beta_Z, double delta_bar,
                              double published_eps_Z = 0.0, const SupOptions& opt = {}) {
    t.validate();
    Certificate cert;
    cert.triple = t;
    cert.side = t.boundary() ? "Boundary-HA" : "HA";
    cert.published_eps = published_eps_Z;
    cert.constants = certified_constants(t, beta_Z, delta_bar,
                                         /*beta_X=*/0.1, t.boundary());
    cert.constants.eps_Z_published = published_eps_Z;

    if (t.k % 2 != 0) {
        cert.status = CertStatus::Refused;
        cert.reason = "odd k: complement symmetry unavailable";
        return cert;
    }
    if (t.j_Z < 4) {
        cert.status = CertStatus::Refused;
        cert.reason = "j_Z < 4";
        return cert;
    }

    const double alpha_Z = t.alpha_Z();
    // (1) h2(delta_bar) > alpha_Z, outward-rounded.
    if (!(ivl::h2_point(delta_bar).lo > alpha_Z)) {
        cert.status = CertStatus::Failed;
        cert.reason = "h2(delta_bar) <= alpha_Z";
        return cert;
    }
    // (2) q(beta_Z/k) > delta_bar. Not load-bearing for soundness: the
    // certified function clips the divergence where q <= delta_bar, so a
    // violation (boundary rows j >= 10) is recorded, not fatal.
    const double tau_lo = beta_Z / t.k;
    const Interval T0 = ivl::ipow(Interval(1.0 - 2.0 * tau_lo), t.k);
    const Interval q0 = ivl::scale(ivl::sub(Interval(1.0), T0), 0.5);
    if (!(q0.lo > delta_bar))
        cert.reason = "note: q(beta_Z/k) <= delta_bar, divergence clip engaged; ";
    // (3) lambda_Z < 1.
    if (!(cert.constants.lambda_Z < 1.0)) {
        cert.status = CertStatus::Failed;
        cert.reason = "lambda_Z >= 1";
        return cert;
    }
    // (5) tail inequality; checked before the subdivision so a bad k fails fast.
    const double tail = ivl::up((1.0 + alpha_Z) * ivl::up(ipow(0.02, t.k - 2)));
    if (!(tail <= 0.5)) {
        cert.status = CertStatus::Failed;
        cert.reason = "tail bound (1+alpha_Z) 0.02^(k-2) > 1/2";
        return cert;
    }

    // (4) boxwise supremum certification on [beta_Z/k, 0.49].
    FnParams fp;
    fp.triple = t;
    fp.delta_bar = delta_bar;
    BoxND box;
    box.dims = {Interval(ivl::down(tau_lo), 0.49)};
    const double ref = published_eps_Z > 0.0 ? published_eps_Z : 1e-6;
    Certificate sup = detail::tiered_sup_certify(FnId::GZ, fp, {box}, ref, opt);
    cert.region = "tau in " + detail::fmt_interval(tau_lo, 0.49);
    cert.threshold = sup.threshold;
    cert.certified_sup_bound = sup.certified_sup_bound;
    cert.boxes_processed = sup.boxes_processed;
    cert.max_depth = sup.max_depth;
    cert.min_width = sup.min_width;
    cert.max_boxes = sup.max_boxes;
    cert.status = sup.status;
    if (sup.status != CertStatus::Certified) cert.reason += sup.reason;
    cert.margin = -sup.certified_sup_bound;
    return cert;
}

// ---------------------------------------------------------------------------
// MN-side certification (Appendix E pipeline; Appendix F one-block variant
// when the triple sits on the boundary). Steps:
//   refusals as on the HA side;
//   (1) constants, B_X < 1,
//   (2) linear-regime preconditions j_X >= 2 and mu(omega_*) <= alpha_X/2,
//   (3) sup of Phi_+ over the L-shaped region x [0, omega_*] below -eps,
//   (4) odd j_Z: Phi_- <= Phi_+ domination (product < 1 on the region),
//   (5) odd j_Z: closed-form odd-corner value < 0.
// ---------------------------------------------------------------------------
inline Certificate mn_certify(const BalancedTriple& t, double beta_X,
                              double published_eps_X = 0.0, const SupOptions& opt = {}) {
    t.validate();
    const bool boundary = t.boundary();
    Certificate cert;
    cert.triple = t;
    cert.side = boundary ? "Boundary-MN" : "MN";
    cert.published_eps = published_eps_X;
    cert.constants =
        certified_constants(t, /*beta_Z=*/0.1, /*delta_bar=*/0.1, beta_X, boundary);
    cert.constants.eps_X_published = published_eps_X;

    if (t.k % 2 != 0) {
        cert.status = CertStatus::Refused;
        cert.reason = "odd k: complement symmetry unavailable";
        return cert;
    }
    // Interior pipeline needs j_Z >= 4 as on the HA side; the one-block
    // boundary variant proceeds so that (3,3,6) reports its actual blocker,
    // the small-support base B_X staying above 1.
    if (t.j_Z < 4 && !boundary) {
        cert.status = CertStatus::Refused;
        cert.reason = "j_Z < 4";
        return cert;
    }

    const CertConstants& cc = cert.constants;
    if (!(cc.B_X < 1.0)) {
        cert.status = CertStatus::Failed;
        cert.reason = "B_X >= 1: low-weight small-support bound open";
        return cert;
    }
    if (t.j_X < 2) {
        cert.status = CertStatus::Failed;
        cert.reason = "j_X < 2";
        return cert;
    }
    // mu(omega_*) = alpha_X/2 (1/4 on the boundary) by definition of
    // omega_*; verify the powered-back identity within outward rounding.
    const double mu_target = boundary ? 0.25 : t.alpha_X() / 2.0;
    const Interval mu_star = ivl::ipow(Interval(1.0 - 2.0 * cc.omega_star), t.k);
    if (!(mu_star.lo <= mu_target + 1e-12 && mu_star.hi >= mu_target - 1e-12)) {
        cert.status = CertStatus::Failed;
        cert.reason = "omega_* identity check failed";
        return cert;
    }

    FnParams fp;
    fp.triple = t;
    fp.boundary = boundary;
    const double edge = beta_X / t.k;
    const double w_hi = ivl::up(cc.omega_star);
    std::vector<BoxND> region;
    if (boundary) {
        BoxND b1;
        b1.dims = {Interval(ivl::down(edge), 0.5), Interval(0.0), Interval(0.0, w_hi)};
        region.push_back(b1);
    } else {
        BoxND b1, b2;
        b1.dims = {Interval(ivl::down(edge), 0.5), Interval(0.0, 0.5), Interval(0.0, w_hi)};
        b2.dims = {Interval(0.0, ivl::up(edge)), Interval(ivl::down(edge), 0.5),
                   Interval(0.0, w_hi)};
        region.push_back(b1);
        region.push_back(b2);
    }
    const double ref = published_eps_X > 0.0 ? published_eps_X : 1e-6;
    Certificate sup = detail::tiered_sup_certify(FnId::PhiPlus, fp, region, ref, opt);
    cert.region = "L-region max{a,b} >= " + std::to_string(edge) + ", omega in [0, " +
                  std::to_string(cc.omega_star) + "]";
    cert.threshold = sup.threshold;
    cert.certified_sup_bound = sup.certified_sup_bound;
    cert.boxes_processed = sup.boxes_processed;
    cert.max_depth = sup.max_depth;
    cert.min_width = sup.min_width;
    cert.max_boxes = sup.max_boxes;
    if (sup.status != CertStatus::Certified) {
        cert.status = sup.status;
        cert.reason = sup.reason;
        return cert;
    }
    cert.margin = -sup.certified_sup_bound;

    if (t.j_Z % 2 != 0) {
        // (4) domination premise: mu y1^jZ yD^jD < 1 on the L-region.
        const unsigned jmin =
            boundary ? t.j_Z : std::min(t.j_Z, t.j_Delta());
        const Interval dom = ivl::ipow(Interval(1.0 - 2.0 * ivl::down(edge)), jmin);
        if (!(dom.hi < 1.0)) {
            cert.status = CertStatus::Failed;
            cert.reason = "odd j_Z: domination premise fails on region";
            return cert;
        }
        // (5) odd-corner closed form, outward-rounded, must be negative.
        if (!(cc.odd_corner < 0.0)) {
            cert.status = CertStatus::Failed;
            cert.reason = "odd j_Z: odd-corner bound not negative";
            return cert;
        }
    }
    cert.status = CertStatus::Certified;
    return cert;
}

// ---------------------------------------------------------------------------
// Zero-quantum-rate boundary: both classical sides of (j, j, 2j).
// ---------------------------------------------------------------------------
struct BoundaryCertificates {
    Certificate ha, mn;
};

inline BoundaryCertificates boundary_certify(unsigned j, const SupOptions& opt = {}) {
    if (j < 3 || j > 15)
        throw domain_violation("boundary_certify: 3 <= j <= 15 required");
    const BalancedTriple t{j, j, 2 * j};
    BoundaryCertificates out;
    if (auto row = find_f1(j)) {
        out.ha = ha_certify(t, row->beta_Z, row->delta_bar, row->eps_Z, opt);
        out.mn = mn_certify(t, row->beta_X, row->eps_X, opt);
        return out;
    }
    // No published row (j = 3): search the standard beta grids.
    out.ha = ha_certify(t, 0.25, 0.11002787, 0.0, opt);
    Certificate best;
    bool have = false;
    for (double bx : {0.10, 0.12, 0.15, 0.20}) {
        Certificate c = mn_certify(t, bx, 0.0, opt);
        if (c.status == CertStatus::Certified) {
            out.mn = c;
            return out;
        }
        if (!have || c.constants.B_X < best.constants.B_X) {
            best = c;
            have = true;
        }
    }
    out.mn = best;
    return out;
}

// ---------------------------------------------------------------------------
// Psi_k <= 0 on [2^-20, 1 - 2^-20], threshold 0; the endpoints are exact
// zeros of the closed form and are checked separately.
// ---------------------------------------------------------------------------
inline Certificate psi_certify(unsigned k, const SupOptions& opt = {}) {
    Certificate cert;
    cert.side = "Psi";
    if (k < 3) {
        cert.status = CertStatus::Refused;
        cert.reason = "k >= 3 required";
        return cert;
    }
    if (psi(0.0, k) != 0.0 || psi(1.0, k) != 0.0) {
        cert.status = CertStatus::Failed;
        cert.reason = "endpoint values not exactly zero";
        return cert;
    }
    FnParams fp;
    fp.k = k;
    const double eps = std::ldexp(1.0, -20);
    BoxND box;
    box.dims = {Interval(eps, 1.0 - eps)};
    Certificate sup = sup_certify(FnId::Psi, fp, {box}, 0.0, opt);
    sup.side = "Psi";
    sup.region = "y in " + detail::fmt_interval(eps, 1.0 - eps);
    sup.margin = -sup.certified_sup_bound;
    return sup;
}

} // namespace cssgv

#endif
