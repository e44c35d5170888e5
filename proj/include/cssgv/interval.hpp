#ifndef CSSGV_INTERVAL_HPP
#define CSSGV_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "cssgv/errors.hpp"

namespace cssgv {

// Closed interval with outward rounding. Directed rounding is realized by
// one-ulp outward widening per primitive; transcendentals are evaluated in
// 80-bit long double, whose error is far below one double ulp, then
// widened. Every operation returns an enclosure of the exact real image.
struct Interval {
    double lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(l <= h)) throw domain_violation("Interval: lo > hi or NaN");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

namespace ivl {

inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline Interval hull(double a, double b) { return a <= b ? Interval(a, b) : Interval(b, a); }

inline Interval add(const Interval& a, const Interval& b) {
    return Interval(down(a.lo + b.lo), up(a.hi + b.hi));
}
inline Interval sub(const Interval& a, const Interval& b) {
    return Interval(down(a.lo - b.hi), up(a.hi - b.lo));
}
inline Interval neg(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval mul(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(down(std::min(std::min(p1, p2), std::min(p3, p4))),
                    up(std::max(std::max(p1, p2), std::max(p3, p4))));
}

inline Interval scale(const Interval& a, double c) { return mul(a, Interval(c)); }

inline Interval div(const Interval& a, const Interval& b) {
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw domain_violation("Interval div: denominator straddles zero");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return Interval(down(std::min(std::min(p1, p2), std::min(p3, p4))),
                    up(std::max(std::max(p1, p2), std::max(p3, p4))));
}

inline Interval sqr(const Interval& a) {
    if (a.lo >= 0.0) return Interval(down(a.lo * a.lo), up(a.hi * a.hi));
    if (a.hi <= 0.0) return Interval(down(a.hi * a.hi), up(a.lo * a.lo));
    const double m = std::max(-a.lo, a.hi);
    return Interval(0.0, up(m * m));
}

// x^k by repeated interval multiplication (sound for any sign pattern).
inline Interval ipow(const Interval& a, unsigned k) {
    Interval acc(1.0);
    Interval base = a;
    while (k) {
        if (k & 1u) acc = mul(acc, base);
        if (k >>= 1) base = (base.lo >= 0.0 || base.hi <= 0.0) ? sqr(base) : mul(base, base);
    }
    return acc;
}

// Monotone transcendental wrappers: point evaluation through long double.
inline double log2_pt_down(double x) { return down(static_cast<double>(log2l(x))); }
inline double log2_pt_up(double x) { return up(static_cast<double>(log2l(x))); }

inline Interval log2(const Interval& a) {
    if (a.lo <= 0.0) throw domain_violation("Interval log2: nonpositive argument");
    return Interval(log2_pt_down(a.lo), log2_pt_up(a.hi));
}

// log2(1 + x), tight near zero.
inline Interval log2p1(const Interval& a) {
    if (a.lo <= -1.0) throw domain_violation("Interval log2p1: argument <= -1");
    const long double inv_ln2 = 1.4426950408889634073599246810018921L;
    return Interval(down(static_cast<double>(log1pl(a.lo) * inv_ln2)),
                    up(static_cast<double>(log1pl(a.hi) * inv_ln2)));
}

inline Interval exp(const Interval& a) {
    return Interval(down(static_cast<double>(expl(a.lo))),
                    up(static_cast<double>(expl(a.hi))));
}

// Point binary entropy with directed rounding; total width <= 2 ulp. The
// true value lies in [0,1], so the enclosure is clamped there.
inline Interval h2_point(double x) {
    if (x < 0.0 || x > 1.0) throw domain_violation("h2_point: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return Interval(0.0);
    const long double lx = static_cast<long double>(x);
    const long double v = -lx * log2l(lx) - (1.0L - lx) * log2l(1.0L - lx);
    return Interval(std::max(0.0, down(static_cast<double>(v))),
                    std::min(1.0, up(static_cast<double>(v))));
}

// Binary entropy of an interval: increasing on [0,1/2], decreasing on
// [1/2,1], maximum 1 at 1/2.
inline Interval h2(const Interval& a) {
    if (a.lo < 0.0 || a.hi > 1.0) throw domain_violation("Interval h2: outside [0,1]");
    const Interval left = h2_point(a.lo), right = h2_point(a.hi);
    if (a.hi <= 0.5) return Interval(left.lo, right.hi);
    if (a.lo >= 0.5) return Interval(right.lo, left.hi);
    return Interval(std::min(left.lo, right.lo), 1.0);
}

// D(p || q) for point p and interval q in (0,1), through the cross-entropy
// decomposition D = -h2(p) - p log2 q - (1-p) log2(1-q).
inline Interval kl_point_q(double p, const Interval& q) {
    if (q.lo <= 0.0 || q.hi >= 1.0)
        throw domain_violation("kl_point_q: q outside (0,1)");
    Interval acc = neg(h2_point(p));
    if (p > 0.0) acc = add(acc, neg(scale(log2(q), p)));
    if (p < 1.0)
        acc = add(acc, neg(scale(log2(sub(Interval(1.0), q)), 1.0 - p)));
    return acc;
}

} // namespace ivl

// Axis-aligned box, 1 to 3 dimensions.
struct BoxND {
    std::vector<Interval> dims;

    std::size_t widest() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < dims.size(); ++i)
            if (dims[i].width() > dims[best].width()) best = i;
        return best;
    }
    double max_width() const {
        double w = 0;
        for (const auto& d : dims) w = std::max(w, d.width());
        return w;
    }
};

} // namespace cssgv

#endif
