#ifndef CSSGV_ENTROPY_HPP
#define CSSGV_ENTROPY_HPP

#include <cmath>

#include "cssgv/errors.hpp"

namespace cssgv {

// Binary entropy, h2(0) = h2(1) = 0.
inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw domain_violation("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Inverse restricted to [0, 1/2], bisection to |delta| <= 1e-12.
inline double binary_entropy_inv(double y) {
    if (y < 0.0 || y > 1.0) throw domain_violation("binary_entropy_inv: y outside [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// KL divergence D(p || q), base 2, with 0 log 0 = 0.
inline double kl_bernoulli(double p, double q) {
    if (p < 0.0 || p > 1.0) throw domain_violation("kl_bernoulli: p outside [0,1]");
    if (q <= 0.0 || q >= 1.0) throw domain_violation("kl_bernoulli: q outside (0,1)");
    double t = 0.0;
    if (p > 0.0) t += p * std::log2(p / q);
    if (p < 1.0) t += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
    return t;
}

// x^k for integer k >= 0 (handles negative bases exactly, unlike pow).
inline double ipow(double x, unsigned k) {
    double acc = 1.0, base = x;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace cssgv

#endif
