#ifndef CSSGV_EXPONENTS_HPP
#define CSSGV_EXPONENTS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cssgv/entropy.hpp"
#include "cssgv/errors.hpp"
#include "cssgv/profile.hpp"

namespace cssgv {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Outer regular-code exponent W_o(tau).
//
// Trial mode is the closed substitution x = tau/(1-tau):
//   alpha_Z log2(1 + (1-2 tau)^k) + h2(tau) - alpha_Z.
// Infimum mode minimizes log2(((1+x)^k + (1-x)^k) / (2 x^{tau k})) over
// x > 0 (ternary search on log x in [-40, 40], 200 iterations), scaled by
// alpha_Z, minus (j_Z - 1) h2(tau). Infimum <= trial pointwise.
// ---------------------------------------------------------------------------
enum class WoMode { Trial, Infimum };

inline double outer_exponent(double tau, unsigned j_Z, unsigned k,
                             WoMode mode = WoMode::Trial) {
    if (tau < 0.0 || tau > 1.0) throw domain_violation("outer_exponent: tau outside [0,1]");
    const double alpha_Z = double(j_Z) / k;
    if (mode == WoMode::Trial) {
        const double T = ipow(1.0 - 2.0 * tau, k);
        if (1.0 + T <= 0.0) return neg_inf;
        return alpha_Z * std::log2(1.0 + T) + binary_entropy(tau) - alpha_Z;
    }
    if (tau == 0.0) return 0.0;
    if (tau == 1.0 && (k & 1u)) return neg_inf; // all-ones is not a codeword
    const double tk = tau * k;
    auto obj = [&](double t) {
        const double x = std::exp(t);
        const double fp = 0.5 * (ipow(1.0 + x, k) + ipow(1.0 - x, k));
        return std::log2(fp) - tk * t / std::numbers::ln2_v<double>;
    };
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (obj(m1) < obj(m2)) hi = m2; else lo = m1;
    }
    return alpha_Z * obj(0.5 * (lo + hi)) - double(j_Z - 1) * binary_entropy(tau);
}

// ---------------------------------------------------------------------------
// HA transition exponent F_Z(tau, omega) and the visible envelope
//   W_Z^ub(omega) = h2(omega) + max_{omega/k <= tau <= 1-omega/k} F_Z.
// ---------------------------------------------------------------------------
inline double ha_F(double tau, double omega, unsigned j_Z, unsigned k,
                   WoMode mode = WoMode::Trial) {
    if (omega < 0.0 || omega > 1.0) throw domain_violation("ha_F: omega outside [0,1]");
    const double T = ipow(1.0 - 2.0 * tau, k);
    const double wo = outer_exponent(tau, j_Z, k, mode);
    if (wo == neg_inf) return neg_inf;
    double acc = wo;
    if (omega > 0.0) {
        if (1.0 - T <= 0.0) return neg_inf;
        acc += omega * std::log2((1.0 - T) / 2.0);
    }
    if (omega < 1.0) {
        if (1.0 + T <= 0.0) return neg_inf;
        acc += (1.0 - omega) * std::log2((1.0 + T) / 2.0);
    }
    return acc;
}

struct EnvelopeParams {
    std::size_t grid = 4096;     // tau grid points
    int refine_iters = 60;       // golden-section iterations per bracket
    int refine_brackets = 3;     // local maxima refined
};

namespace detail {

template <typename F>
double grid_max_refined(F&& f, double lo, double hi, const EnvelopeParams& ep) {
    if (hi <= lo) return f(lo);
    const std::size_t g = ep.grid;
    std::vector<double> vals(g);
    for (std::size_t i = 0; i < g; ++i)
        vals[i] = f(lo + (hi - lo) * double(i) / double(g - 1));
    std::vector<std::size_t> tops;
    for (std::size_t i = 0; i < g; ++i) {
        const bool up = i == 0 || vals[i] >= vals[i - 1];
        const bool down = i + 1 == g || vals[i] >= vals[i + 1];
        if (up && down) tops.push_back(i);
    }
    std::sort(tops.begin(), tops.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (tops.size() > static_cast<std::size_t>(ep.refine_brackets))
        tops.resize(static_cast<std::size_t>(ep.refine_brackets));
    double best = *std::max_element(vals.begin(), vals.end());
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t t : tops) {
        double a = lo + (hi - lo) * double(t > 0 ? t - 1 : 0) / double(g - 1);
        double b = lo + (hi - lo) * double(std::min(t + 1, g - 1)) / double(g - 1);
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < ep.refine_iters; ++it) {
            if (f1 < f2) {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + phi * (b - a); f2 = f(x2);
            } else {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - phi * (b - a); f1 = f(x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

} // namespace detail

inline double ha_envelope(double omega, unsigned j_Z, unsigned k,
                          WoMode mode = WoMode::Trial,
                          const EnvelopeParams& ep = {}) {
    if (omega < 0.0 || omega > 1.0) throw domain_violation("ha_envelope: omega outside [0,1]");
    const double lo = omega / k, hi = 1.0 - omega / k;
    const double m = detail::grid_max_refined(
        [&](double tau) { return ha_F(tau, omega, j_Z, k, mode); }, lo, hi, ep);
    return binary_entropy(omega) + m;
}

// ---------------------------------------------------------------------------
// Certified one-variable HA function
//   G_{Z,delta}(tau) = h2(tau) - alpha_Z + alpha_Z log2(1 + (1-2 tau)^k)
//                      - D(delta || (1 - (1-2 tau)^k)/2).
// ---------------------------------------------------------------------------
inline double ha_G(double tau, double delta, unsigned j_Z, unsigned k) {
    if (tau < 0.0 || tau > 0.5) throw domain_violation("ha_G: tau outside [0,1/2]");
    if (delta <= 0.0 || delta >= 0.5) throw domain_violation("ha_G: delta outside (0,1/2)");
    const double alpha_Z = double(j_Z) / k;
    const double T = ipow(1.0 - 2.0 * tau, k);
    const double q = 0.5 * (1.0 - T);
    if (q <= 0.0) return neg_inf;
    return binary_entropy(tau) - alpha_Z + alpha_Z * std::log2(1.0 + T) -
           kl_bernoulli(delta, q);
}

// Variant the certificates bound: the divergence term is dropped where
// q(tau) <= delta (it only helps there), which keeps the function an upper
// bound on h2(omega) + F_Z for every omega <= delta even when q(beta_Z/k)
// dips below delta_bar (it does on the boundary rows with j >= 10).
inline double ha_G_certified(double tau, double delta, unsigned j_Z, unsigned k) {
    if (tau < 0.0 || tau > 0.5) throw domain_violation("ha_G_certified: tau outside [0,1/2]");
    const double alpha_Z = double(j_Z) / k;
    const double T = ipow(1.0 - 2.0 * tau, k);
    const double q = 0.5 * (1.0 - T);
    double acc = binary_entropy(tau) - alpha_Z + alpha_Z * std::log2(1.0 + T);
    if (q > delta) acc -= kl_bernoulli(delta, q);
    return acc;
}

// ---------------------------------------------------------------------------
// MN trial exponents.
//   Phi_+ = aZ h2(a) + aD h2(b) + h2(w) - 1 + log2(1 + mu y1^jZ yD^jD)
//   Phi_- = same with log2(1 - mu y1^jZ yD^jD); requires the argument < 1.
// The boundary flag drops the b block (j_Delta = 0, alpha_Z = 1/2).
// ---------------------------------------------------------------------------
enum class TrialSign { Plus, Minus };

inline double mn_trial(double a, double b, double omega, const BalancedTriple& t,
                       TrialSign sign = TrialSign::Plus, bool boundary = false) {
    if (a < 0 || a > 1 || b < 0 || b > 1 || omega < 0 || omega > 1)
        throw domain_violation("mn_trial: arguments outside [0,1]");
    const unsigned jz = t.j_Z, jd = boundary ? 0u : t.j_Delta(), k = t.k;
    const double az = t.alpha_Z();
    const double ad = boundary ? 0.0 : t.alpha_Delta();
    const double y1 = std::fabs(1.0 - 2.0 * a);
    const double yd = std::fabs(1.0 - 2.0 * b);
    const double mu = ipow(std::fabs(1.0 - 2.0 * omega), k);
    const double prod = mu * ipow(y1, jz) * (jd ? ipow(yd, jd) : 1.0);
    double logterm;
    if (sign == TrialSign::Plus) {
        logterm = std::log2(1.0 + prod);
    } else {
        if (prod >= 1.0)
            throw log_domain_error("mn_trial: minus sign requires mu y1^jZ yD^jD < 1");
        logterm = std::log2(1.0 - prod);
    }
    return az * binary_entropy(a) + (jd ? ad * binary_entropy(b) : 0.0) +
           binary_entropy(omega) - 1.0 + logterm;
}

// ---------------------------------------------------------------------------
// Master-bound omega-free part q(tau) = tau log2(e alpha_X / tau) - k tau / ln 2
// and the square-map kernel exponent Psi_k.
// ---------------------------------------------------------------------------
inline double master_q(double tau, const BalancedTriple& t) {
    const double ax = t.alpha_X();
    if (tau <= 0.0 || tau > ax) throw domain_violation("master_q: tau outside (0, alpha_X]");
    const double e = std::numbers::e_v<double>;
    return tau * std::log2(e * ax / tau) - t.k * tau / std::numbers::ln2_v<double>;
}

// Psi_k(y) = log2( ((1+t)^k + (1-t)^k) / (2 (1 + y^k)^{k-1}) ), t = y^{k-1}.
inline double psi(double y, unsigned k) {
    if (k < 3) throw domain_violation("psi: k >= 3 required");
    if (y < 0.0 || y > 1.0) throw domain_violation("psi: y outside [0,1]");
    const double tt = ipow(y, k - 1);
    const double num = ipow(1.0 + tt, k) + ipow(1.0 - tt, k);
    const double den = 2.0 * ipow(1.0 + ipow(y, k), k - 1);
    return std::log2(num / den);
}

// ---------------------------------------------------------------------------
// Certified-constant formulas (Appendices B, D, E, F).
// ---------------------------------------------------------------------------
struct CertConstants {
    BalancedTriple triple;
    bool boundary = false;
    // HA side
    double beta_Z = 0, delta_bar = 0, lambda_Z = 0, eps_Z_published = 0;
    // MN side
    double beta_X = 0, B_X = 0, eps_X_published = 0;
    // derived
    double omega_star = 0, tau_0 = 0, rho_0 = 0, C_0 = 0, c_0 = 0, eta_X = 0;
    double odd_corner = 0; // closed-form bound for the odd-j_Z upper-half corner
};

inline CertConstants certified_constants(const BalancedTriple& t, double beta_Z,
                                         double delta_bar, double beta_X,
                                         bool boundary = false) {
    t.validate();
    if (boundary != t.boundary())
        throw domain_violation("certified_constants: boundary flag disagrees with triple");
    const unsigned jz = t.j_Z, jd = t.j_Delta(), k = t.k;
    const double e = std::numbers::e_v<double>;
    CertConstants c;
    c.triple = t;
    c.boundary = boundary;
    c.beta_Z = beta_Z;
    c.delta_bar = delta_bar;
    c.beta_X = beta_X;
    c.lambda_Z = beta_Z * k / e;
    // 2^{-k/ln 2} = e^{-k} exactly; composing pow and log here would only
    // add rounding.
    c.tau_0 = 2.0 * e * t.alpha_X() * std::exp(-double(k));
    if (boundary) {
        c.omega_star = 0.5 * (1.0 - std::pow(4.0, -1.0 / k));
        c.rho_0 = std::max(beta_X / jz, c.omega_star);
        c.c_0 = beta_X / k + c.omega_star;
        c.eta_X = ipow(1.0 - 2.0 * beta_X / jz, jz);
        c.B_X = std::sqrt(2.0) * e * (1.0 + 0.5) / c.c_0 *
                ipow((1.0 + c.rho_0) / ((1.0 - c.rho_0) * (1.0 - c.rho_0)) * k * c.c_0 / e,
                     k / 2);
        c.C_0 = (1.0 + c.rho_0) / ((1.0 - c.rho_0) * (1.0 - c.rho_0));
        c.odd_corner = 0.5 * binary_entropy(beta_X / jz) + binary_entropy(c.omega_star) -
                       1.0 + std::log2(1.0 - ipow(1.0 - 2.0 * c.omega_star, k) * c.eta_X);
    } else {
        c.omega_star = 0.5 * (1.0 - std::pow(t.alpha_X() / 2.0, 1.0 / k));
        c.rho_0 = std::max({beta_X / jz, beta_X / jd, c.omega_star});
        c.c_0 = 2.0 * beta_X / k + c.omega_star;
        c.C_0 = (1.0 + c.rho_0) / ((1.0 - c.rho_0) * (1.0 - c.rho_0));
        c.B_X = std::sqrt(2.0) * e * (1.0 + t.alpha_X()) / c.c_0 *
                ipow(c.C_0 * k * c.c_0 / e, k / 2);
        c.eta_X = ipow(1.0 - 2.0 * beta_X / jz, jz) * ipow(1.0 - 2.0 * beta_X / jd, jd);
        c.odd_corner = t.alpha_Z() * binary_entropy(beta_X / jz) +
                       t.alpha_Delta() * binary_entropy(beta_X / jd) +
                       binary_entropy(c.omega_star) - 1.0 +
                       std::log2(1.0 - ipow(1.0 - 2.0 * c.omega_star, k) * c.eta_X);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Visible X-side envelope: max of Phi_+ over the folded square
// (a, b) in [0, 1/2]^2 (512^2 grid plus local refinement).
// ---------------------------------------------------------------------------
struct XEnvelopeParams {
    std::size_t grid = 512;
    int refine_iters = 40;
};

inline double x_envelope(double omega, const BalancedTriple& t,
                         const XEnvelopeParams& xp = {}) {
    const unsigned jz = t.j_Z, jd = t.j_Delta(), k = t.k;
    const double az = t.alpha_Z(), ad = t.alpha_Delta();
    const double mu = ipow(std::fabs(1.0 - 2.0 * omega), k);
    const double hw = binary_entropy(omega);
    const std::size_t g = xp.grid;

    std::vector<double> ha(g), pa(g), hb(g), pb(g);
    for (std::size_t i = 0; i < g; ++i) {
        const double a = 0.5 * double(i) / double(g - 1);
        ha[i] = az * binary_entropy(a);
        pa[i] = ipow(1.0 - 2.0 * a, jz);
        hb[i] = jd ? ad * binary_entropy(a) : 0.0;
        pb[i] = jd ? ipow(1.0 - 2.0 * a, jd) : 1.0;
    }
    double best = neg_inf;
    std::size_t bi = 0, bj = 0;
    const std::size_t gb = jd ? g : 1;
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < gb; ++j) {
            const double v = ha[i] + hb[j] + hw - 1.0 + std::log2(1.0 + mu * pa[i] * pb[j]);
            if (v > best) { best = v; bi = i; bj = j; }
        }
    }
    // shrinking 3x3 pattern search around the best cell
    auto phi = [&](double a, double b) {
        const double v1 = ipow(1.0 - 2.0 * a, jz), v2 = jd ? ipow(1.0 - 2.0 * b, jd) : 1.0;
        return az * binary_entropy(a) + (jd ? ad * binary_entropy(b) : 0.0) + hw - 1.0 +
               std::log2(1.0 + mu * v1 * v2);
    };
    double ca = 0.5 * double(bi) / double(g - 1);
    double cb = 0.5 * double(bj) / double(g - 1);
    double step = 0.5 / double(g - 1);
    for (int it = 0; it < xp.refine_iters; ++it) {
        double la = ca, lb = cb, lv = phi(ca, cb);
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db) {
                const double a = std::clamp(ca + da * step, 0.0, 0.5);
                const double b = std::clamp(cb + db * step, 0.0, 0.5);
                const double v = phi(a, b);
                if (v > lv) { lv = v; la = a; lb = b; }
            }
        if (la == ca && lb == cb) step *= 0.5;
        ca = la; cb = lb;
        best = std::max(best, lv);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Rightmost-zero proxies. Scans omega from 1/2 downward in steps of 1e-4,
// accepts the largest sign change whose envelope is nonpositive on its
// immediate left, and bisects the bracketing step to 1e-7. Returns 0 when
// no qualifying zero exists.
//
// The Z side uses the infimum-mode W_o: the trial substitution is loose at
// small tau, where it pushes the envelope positive for every omega and
// leaves no zero to find. Reports carry the mode label.
// ---------------------------------------------------------------------------
enum class ProxySide { Z, X, Min };

struct ProxyParams {
    double scan_step = 1e-4;
    double bisect_tol = 1e-7;
    int left_checks = 3;
    WoMode z_mode = WoMode::Infimum;
    EnvelopeParams env = {};
    XEnvelopeParams xenv = {};
};

namespace detail {

// Sign of the Z envelope with cheap positivity witnesses first: any tau
// with h2(w) + F_Z > 0 proves the max positive without the full grid.
template <typename FullEval, typename Witness>
double envelope_value_for_sign(double omega, FullEval&& full, Witness&& witness) {
    const double w = witness(omega);
    if (w > 0.0) return w;
    return full(omega);
}

template <typename EnvSign>
double rightmost_zero_scan(EnvSign&& env, const ProxyParams& pp) {
    double prev_omega = 0.5;
    double prev_val = env(0.5);
    for (double omega = 0.5 - pp.scan_step; omega > 0.0; omega -= pp.scan_step) {
        const double val = env(omega);
        if (prev_val > 0.0 && val <= 0.0) {
            bool left_ok = true;
            for (int i = 1; i <= pp.left_checks; ++i) {
                const double o = omega - i * pp.scan_step;
                if (o <= 0.0) break;
                if (env(o) > 1e-12) { left_ok = false; break; }
            }
            if (left_ok) {
                double lo = omega, hi = prev_omega;
                while (hi - lo > pp.bisect_tol) {
                    const double mid = 0.5 * (lo + hi);
                    if (env(mid) > 0.0) hi = mid; else lo = mid;
                }
                return 0.5 * (lo + hi);
            }
        }
        prev_omega = omega;
        prev_val = val;
    }
    return 0.0;
}

} // namespace detail

inline double proxy_delta_Z(const BalancedTriple& t, const ProxyParams& pp = {}) {
    const unsigned jz = t.j_Z, k = t.k;
    auto full = [&](double omega) {
        return ha_envelope(omega, jz, k, pp.z_mode, pp.env);
    };
    auto witness = [&](double omega) {
        double best = neg_inf;
        const double lo = omega / k, hi = 1.0 - omega / k;
        auto probe = [&](double tau) {
            if (tau < lo || tau > hi) return;
            best = std::max(best, binary_entropy(omega) + ha_F(tau, omega, jz, k, pp.z_mode));
        };
        probe(0.5);
        const double tz = 0.5 * (1.0 - std::pow(std::fabs(1.0 - 2.0 * omega), 1.0 / k));
        probe(std::max(tz, lo));
        for (int i = 1; i <= 16; ++i) probe(lo + (hi - lo) * double(i) / 17.0);
        return best;
    };
    return detail::rightmost_zero_scan(
        [&](double omega) { return detail::envelope_value_for_sign(omega, full, witness); },
        pp);
}

inline double proxy_delta_X(const BalancedTriple& t, const ProxyParams& pp = {}) {
    auto full = [&](double omega) { return x_envelope(omega, t, pp.xenv); };
    auto witness = [&](double omega) {
        double best = neg_inf;
        for (double a : {0.0, 0.25, 0.5})
            for (double b : {0.0, 0.25, 0.5})
                best = std::max(best, mn_trial(a, b, omega, t, TrialSign::Plus, false));
        return best;
    };
    return detail::rightmost_zero_scan(
        [&](double omega) { return detail::envelope_value_for_sign(omega, full, witness); },
        pp);
}

inline double rightmost_zero(ProxySide side, const BalancedTriple& t,
                             const ProxyParams& pp = {}) {
    switch (side) {
        case ProxySide::Z: return proxy_delta_Z(t, pp);
        case ProxySide::X: return proxy_delta_X(t, pp);
        case ProxySide::Min: return std::min(proxy_delta_Z(t, pp), proxy_delta_X(t, pp));
    }
    throw domain_violation("rightmost_zero: unknown side");
}

} // namespace cssgv

#endif
