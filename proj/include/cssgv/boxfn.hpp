#ifndef CSSGV_BOXFN_HPP
#define CSSGV_BOXFN_HPP

#include <string>

#include "cssgv/entropy.hpp"
#include "cssgv/errors.hpp"
#include "cssgv/interval.hpp"
#include "cssgv/profile.hpp"

namespace cssgv {

// Registered exponent functions for boxwise enclosure.
enum class FnId { H2, KL, GZ, PhiPlus, PhiMinus, Psi, SqMinusOne };

inline const char* fn_name(FnId id) {
    switch (id) {
        case FnId::H2: return "h2";
        case FnId::KL: return "kl";
        case FnId::GZ: return "G_Z";
        case FnId::PhiPlus: return "Phi_plus";
        case FnId::PhiMinus: return "Phi_minus";
        case FnId::Psi: return "Psi_k";
        case FnId::SqMinusOne: return "x^2-1";
    }
    return "?";
}

struct FnParams {
    BalancedTriple triple{};
    unsigned k = 0;        // Psi
    double delta_bar = 0;  // G_Z
    double kl_p = 0;       // KL first argument (point)
    bool boundary = false; // Phi variants with j_Delta = 0
};

namespace detail {

// Enclosure of the clipped divergence term tau -> [q(tau) > p] D(p || q(tau)).
// The clip is what the first-moment bound actually uses: for omega <= delta
// < q(tau) the divergence is monotone and may be kept, while on the small
// stretch with q(tau) <= delta_bar the term is dropped (still an upper
// bound since D >= 0). Some boundary-table rows need the clip: their
// q(beta_Z/k) dips below delta_bar.
inline Interval kl_clipped(double p, const Interval& q) {
    if (q.lo >= p) {
        // D(p||q) increasing in q here
        return Interval(ivl::kl_point_q(p, Interval(q.lo)).lo,
                        ivl::kl_point_q(p, Interval(q.hi)).hi);
    }
    if (q.hi <= p) return Interval(0.0);
    return Interval(0.0, ivl::kl_point_q(p, Interval(q.hi)).hi);
}

// Certified HA function on a 1-D box: h2(tau) - alpha_Z
// + alpha_Z log2(1+T) - clip(D(delta_bar || q)). tau must stay in [0,1/2).
inline Interval enclose_gz(const BoxND& box, const FnParams& fp) {
    const Interval tau = box.dims.at(0);
    if (tau.lo < 0.0 || tau.hi >= 0.5)
        throw domain_violation("G_Z enclosure: tau outside [0,1/2)");
    const unsigned k = fp.triple.k;
    const double az = fp.triple.alpha_Z();
    // T = (1-2 tau)^k decreasing in tau on this range.
    const Interval one_minus = ivl::sub(Interval(1.0), ivl::scale(tau, 2.0));
    const Interval T = ivl::ipow(one_minus, k);
    const Interval q = ivl::scale(ivl::sub(Interval(1.0), T), 0.5);
    Interval acc = ivl::h2(tau);
    acc = ivl::add(acc, Interval(-az));
    acc = ivl::add(acc, ivl::scale(ivl::log2p1(T), az));
    acc = ivl::sub(acc, kl_clipped(fp.delta_bar, q));
    return acc;
}

// Trial exponent pieces for Phi_+/Phi_-. Boxes must lie inside [0,1/2]^3;
// h2 is increasing there and mu, y1, yD are decreasing, which gives the
// paper's monotone corner bound on both ends.
struct PhiPieces {
    Interval entropy_lo_corner, entropy_hi_corner; // sum of h2 pieces
    Interval prod_lo_corner, prod_hi_corner;       // mu y1^jZ yD^jD
};

inline PhiPieces phi_pieces(const BoxND& box, const FnParams& fp) {
    const BalancedTriple& t = fp.triple;
    const unsigned jz = t.j_Z, jd = fp.boundary ? 0u : t.j_Delta(), k = t.k;
    const double az = t.alpha_Z(), ad = fp.boundary ? 0.0 : t.alpha_Delta();
    const Interval a = box.dims.at(0);
    const Interval b = box.dims.size() > 1 ? box.dims.at(1) : Interval(0.0);
    const Interval w = box.dims.size() > 2 ? box.dims.at(2) : Interval(0.0);
    if (a.lo < 0 || a.hi > 0.5 || b.lo < 0 || b.hi > 0.5 || w.lo < 0 || w.hi > 0.5)
        throw domain_violation("Phi enclosure: box outside [0,1/2]^3");

    auto y_of = [](double v) { return Interval(1.0 - 2.0 * v); };
    auto prod_at = [&](double av, double bv, double wv) {
        Interval p = ivl::ipow(y_of(wv), k);
        p = ivl::mul(p, ivl::ipow(y_of(av), jz));
        if (jd) p = ivl::mul(p, ivl::ipow(y_of(bv), jd));
        return p;
    };
    auto entropy_at = [&](double av, double bv, double wv) {
        Interval s = ivl::scale(ivl::h2_point(av), az);
        if (jd) s = ivl::add(s, ivl::scale(ivl::h2_point(bv), ad));
        return ivl::add(s, ivl::h2_point(wv));
    };

    PhiPieces p;
    p.entropy_lo_corner = entropy_at(a.lo, b.lo, w.lo);
    p.entropy_hi_corner = entropy_at(a.hi, b.hi, w.hi);
    p.prod_lo_corner = prod_at(a.lo, b.lo, w.lo); // largest product
    p.prod_hi_corner = prod_at(a.hi, b.hi, w.hi); // smallest product
    return p;
}

inline Interval enclose_phi_plus(const BoxND& box, const FnParams& fp) {
    const PhiPieces p = phi_pieces(box, fp);
    const double hi = ivl::add(ivl::add(p.entropy_hi_corner, Interval(-1.0)),
                               ivl::log2p1(p.prod_lo_corner))
                          .hi;
    const double lo = ivl::add(ivl::add(p.entropy_lo_corner, Interval(-1.0)),
                               ivl::log2p1(p.prod_hi_corner))
                          .lo;
    return Interval(std::min(lo, hi), std::max(lo, hi));
}

inline Interval enclose_phi_minus(const BoxND& box, const FnParams& fp) {
    const PhiPieces p = phi_pieces(box, fp);
    if (p.prod_hi_corner.hi >= 1.0)
        throw log_domain_error("Phi_minus enclosure: mu y1^jZ yD^jD reaches 1 on box");
    // log2(1 - prod) is increasing in a, b, omega (prod decreasing).
    const double hi = ivl::add(ivl::add(p.entropy_hi_corner, Interval(-1.0)),
                               ivl::log2p1(ivl::neg(p.prod_hi_corner)))
                          .hi;
    double lo;
    if (p.prod_lo_corner.hi >= 1.0) {
        lo = -std::numeric_limits<double>::infinity();
    } else {
        lo = ivl::add(ivl::add(p.entropy_lo_corner, Interval(-1.0)),
                      ivl::log2p1(ivl::neg(p.prod_lo_corner)))
                 .lo;
    }
    return Interval(std::min(lo, hi), std::max(lo, hi));
}

// Psi_k via the split into two positive-coefficient sums:
//   S1(y) = sum_{even i >= 2} C(k,i) y^{(k-1) i},
//   S2(y) = sum_{j >= 1} C(k-1,j) y^{k j},
//   N - D = 2 (S1 - S2),  D = 2 (1 + S2),
//   Psi   = log2(1 + (N - D)/D) = log2p1( (S1 - S2) / (1 + S2) ).
// Both sums are increasing on [0,1], which keeps the enclosure tight at
// both endpoints where Psi vanishes quadratically.
inline double binom_d(unsigned n, unsigned r) {
    // exact in double for n <= 30
    double acc = 1.0;
    for (unsigned i = 0; i < r; ++i) acc = acc * double(n - i) / double(i + 1);
    return std::round(acc);
}

// Signed sparse polynomial with exactly representable coefficients.
struct SignedPoly {
    std::vector<std::pair<unsigned, double>> terms; // (exponent, coefficient)

    Interval eval(const Interval& y) const {
        Interval acc(0.0);
        for (const auto& [e, c] : terms)
            acc = ivl::add(acc, ivl::scale(ivl::ipow(y, e), c));
        return acc;
    }

    SignedPoly derivative() const {
        SignedPoly d;
        for (const auto& [e, c] : terms)
            if (e > 0) d.terms.emplace_back(e - 1, c * double(e));
        return d;
    }
};

inline Interval intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) throw domain_violation("intersect: disjoint enclosures");
    return Interval(lo, hi);
}

// Mean-value form P(Y) in P(c) + P'(Y) (Y - c); essential where monomial
// sums cancel to first order (Psi's numerator near y = 1).
inline Interval mean_value_eval(const SignedPoly& p, const SignedPoly& dp,
                                const Interval& y) {
    const double c = y.mid();
    const Interval at_mid = p.eval(Interval(c));
    const Interval slope = dp.eval(y);
    const Interval dev(ivl::down(y.lo - c), ivl::up(y.hi - c));
    return ivl::add(at_mid, ivl::mul(slope, dev));
}

// Psi_k via the split into positive-coefficient sums
//   S1(y) = sum_{even i >= 2} C(k,i) y^{(k-1) i},
//   S2(y) = sum_{j >= 1} C(k-1,j) y^{k j},
//   Psi   = log2p1( (S1 - S2) / (1 + S2) ).
// The numerator S1 - S2 vanishes to second order at both endpoints, so its
// enclosure intersects the monotone corner bound with a mean-value form.
inline Interval enclose_psi(const BoxND& box, const FnParams& fp) {
    const unsigned k = fp.k;
    if (k < 3) throw domain_violation("Psi enclosure: k >= 3 required");
    const Interval y = box.dims.at(0);
    if (y.lo < 0.0 || y.hi > 1.0) throw domain_violation("Psi enclosure: y outside [0,1]");

    SignedPoly num_poly, s2_poly;
    for (unsigned i = 2; i <= k; i += 2) num_poly.terms.emplace_back((k - 1) * i, binom_d(k, i));
    for (unsigned j = 1; j <= k - 1; ++j) {
        num_poly.terms.emplace_back(k * j, -binom_d(k - 1, j));
        s2_poly.terms.emplace_back(k * j, binom_d(k - 1, j));
    }
    const SignedPoly dnum = num_poly.derivative();

    // corner bound from the monotone split (tight on narrow boxes near 0)
    auto split_at = [&](double lo_pt, double hi_pt) {
        Interval s1(0.0), s2m(0.0);
        for (const auto& [e, c] : num_poly.terms) {
            const Interval lo_pow = ivl::ipow(Interval(lo_pt), e);
            const Interval hi_pow = ivl::ipow(Interval(hi_pt), e);
            if (c > 0)
                s1 = ivl::add(s1, Interval(ivl::down(lo_pow.lo * c), ivl::up(hi_pow.hi * c)));
            else
                s2m = ivl::add(s2m, Interval(ivl::down(hi_pow.hi * c), ivl::up(lo_pow.lo * c)));
        }
        return ivl::add(s1, s2m);
    };
    const Interval num_corner = split_at(y.lo, y.hi);
    const Interval num_mv = mean_value_eval(num_poly, dnum, y);
    const Interval num = intersect(num_corner, num_mv);

    const Interval s2(s2_poly.eval(Interval(y.lo)).lo, s2_poly.eval(Interval(y.hi)).hi);
    const Interval den = ivl::add(Interval(1.0), s2);
    const Interval ratio = ivl::div(num, den);
    // N/D - 1 > -1 always (N > 0); wide-box dependency can still push the
    // computed lower end past -1, where the log lower bound degenerates.
    if (ratio.hi <= -1.0) throw domain_violation("Psi enclosure: impossible ratio");
    const double hi = ivl::log2p1(Interval(ratio.hi)).hi;
    const double lo = ratio.lo > -1.0 ? ivl::log2p1(Interval(ratio.lo)).lo
                                      : -std::numeric_limits<double>::infinity();
    return Interval(lo, hi);
}

} // namespace detail

// Interval containing the true range of the named function on the box.
inline Interval ienclose(FnId id, const BoxND& box, const FnParams& fp) {
    switch (id) {
        case FnId::H2:
            return ivl::h2(box.dims.at(0));
        case FnId::KL: {
            const Interval q = box.dims.at(0);
            return ivl::kl_point_q(fp.kl_p, q);
        }
        case FnId::GZ:
            return detail::enclose_gz(box, fp);
        case FnId::PhiPlus:
            return detail::enclose_phi_plus(box, fp);
        case FnId::PhiMinus:
            return detail::enclose_phi_minus(box, fp);
        case FnId::Psi:
            return detail::enclose_psi(box, fp);
        case FnId::SqMinusOne: {
            const Interval x = box.dims.at(0);
            return ivl::sub(ivl::sqr(x), Interval(1.0));
        }
    }
    throw unknown_function_error("ienclose: unregistered function id");
}

} // namespace cssgv

#endif
