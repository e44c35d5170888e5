#ifndef CSSGV_ENUMERATORS_HPP
#define CSSGV_ENUMERATORS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "cssgv/bigrat.hpp"
#include "cssgv/errors.hpp"
#include "cssgv/gf2.hpp"
#include "cssgv/poly.hpp"
#include "cssgv/profile.hpp"
#include "cssgv/rng.hpp"
#include "cssgv/sampler.hpp"

namespace cssgv {

// ---------------------------------------------------------------------------
// Outer regular code: average weight distribution
//   N_o(s) = C(n,s) [x^{j s}] f_plus(x,k)^{m} / C(n j, j s),  m = j n / k.
// ---------------------------------------------------------------------------
inline Rat outer_enum(std::size_t n, unsigned j, unsigned k, std::size_t s) {
    if (j == 0 || k == 0 || n == 0)
        throw domain_violation("outer_enum: positive parameters required");
    if ((j * n) % k != 0)
        throw divisibility_error("outer_enum: k must divide j*n");
    if (s > n) throw domain_violation("outer_enum: s > n");
    const unsigned m = static_cast<unsigned>(j * n / k);
    const unsigned target = static_cast<unsigned>(j * s);
    const IntPoly fp = f_plus(k);
    const IntPoly powm = fp.pow_truncated(m, {target, 0, 0});
    const Int num = binom(n, s) * powm.coeff1(target);
    const Int den = binom(j * n, target);
    return make_rat(num, den);
}

// ---------------------------------------------------------------------------
// Square-map transition enumerator
//   M_k(s,l) = C(n,l) [z^{ks}] f_minus^l f_plus^{n-l} / C(kn, ks).
// Odd k is permitted but lies outside the Lemma hypothesis; callers that
// care flag it in reports.
// ---------------------------------------------------------------------------
inline Rat transition_kernel(std::size_t n, unsigned k, std::size_t s, std::size_t l) {
    if (k == 0 || n == 0)
        throw domain_violation("transition_kernel: positive parameters required");
    if (s > n || l > n) throw domain_violation("transition_kernel: s,l <= n required");
    const unsigned target = static_cast<unsigned>(k * s);
    const IntPoly::Key box{target, 0, 0};
    IntPoly prod = f_minus(k).pow_truncated(static_cast<unsigned>(l), box);
    prod = prod.mul_truncated(f_plus(k).pow_truncated(static_cast<unsigned>(n - l), box), box);
    const Int num = binom(n, l) * prod.coeff1(target);
    const Int den = binom(k * n, target);
    return make_rat(num, den);
}

// ---------------------------------------------------------------------------
// HA first-moment bound  N_Z^ub(l) = sum_{s=ceil(l/k)}^{n-ceil(l/k)} N_o(s) M_k(s,l)
// ---------------------------------------------------------------------------
inline Rat ha_mean_bound(std::size_t n, unsigned j, unsigned k, std::size_t l) {
    if (l > n) throw domain_violation("ha_mean_bound: l <= n required");
    const std::size_t s_lo = (l + k - 1) / k;
    if (s_lo > n) return Rat(0);
    const std::size_t s_hi = n - s_lo;
    Rat total(0);
    for (std::size_t s = s_lo; s <= s_hi; ++s)
        total += outer_enum(n, j, k, s) * transition_kernel(n, k, s, l);
    return total;
}

// ---------------------------------------------------------------------------
// Stacked refined enumerator. One-column generating function
//   g(u,v,r) = [ (1+u)^jZ (1+v)^jD (1+r)^k + (1-u)^jZ (1-v)^jD (1-r)^k ] / 2,
// with the odd part g^- replacing g for the all-ones syndrome coset.
// j_Delta = 0 drops the v variable (boundary one-block case).
// ---------------------------------------------------------------------------
enum class SyndromeType { Even, AllOnes };

inline IntPoly one_column_gen(unsigned jz, unsigned jd, unsigned k, SyndromeType syn) {
    IntPoly g(3);
    const unsigned want = (syn == SyndromeType::Even) ? 0u : 1u;
    for (unsigned a = 0; a <= jz; ++a)
        for (unsigned b = 0; b <= jd; ++b)
            for (unsigned c = 0; c <= k; ++c)
                if (((a + b + c) & 1u) == want)
                    g.add_term({a, b, c}, binom(jz, a) * binom(jd, b) * binom(k, c));
    return g;
}

// Homogeneous stacked shape: (j_Z, k)- and (j_Delta, k)-regular blocks over
// a square (k, k) map. Balance (j_X + j_Z = k) is not required by Eq. (8).
struct StackedShape {
    unsigned j_Z = 0, j_Delta = 0, k = 0;

    static StackedShape of(const BalancedTriple& t) {
        t.validate();
        return {t.j_Z, t.j_Delta(), t.k};
    }
    static StackedShape of(const DegreeProfile& p) {
        if (p.k_Z != p.k || (p.j_Delta > 0 && p.k_Delta != p.k))
            throw domain_violation("StackedShape: profile must be homogeneous (k_Z = k_Delta = k)");
        return {p.j_Z, p.j_Delta, p.k};
    }
};

// E[N_X(t1, td, w)] on the homogeneous stacked ensemble at blocklength n.
inline Rat stacked_mean(const StackedShape& s, std::size_t n, std::size_t t1,
                        std::size_t td, std::size_t w,
                        SyndromeType syn = SyndromeType::Even) {
    const unsigned jz = s.j_Z, jd = s.j_Delta, k = s.k;
    if (jz == 0 || k == 0) throw domain_violation("stacked_mean: j_Z, k must be positive");
    if ((jz * n) % k != 0 || (jd * n) % k != 0)
        throw divisibility_error("stacked_mean: k must divide j_Z*n and j_Delta*n");
    const std::size_t mz = jz * n / k, md = jd * n / k;
    if (t1 > mz || td > md || w > n)
        throw domain_violation("stacked_mean: weights exceed block dimensions");

    const IntPoly::Key box{static_cast<unsigned>(k * t1), static_cast<unsigned>(k * td),
                           static_cast<unsigned>(k * w)};
    const IntPoly g = one_column_gen(jz, jd, k, syn);
    const IntPoly gn = g.pow_truncated(static_cast<unsigned>(n), box);
    const Int num = binom(mz, t1) * binom(md, td) * binom(n, w) * gn.coeff(box);
    const Int den = binom(jz * n, box[0]) * binom(jd * n, box[1]) * binom(k * n, box[2]);
    return make_rat(num, den);
}

inline Rat stacked_mean(const BalancedTriple& t, std::size_t n, std::size_t t1,
                        std::size_t td, std::size_t w,
                        SyndromeType syn = SyndromeType::Even) {
    return stacked_mean(StackedShape::of(t), n, t1, td, w, syn);
}

inline Rat n_dep_mean(const StackedShape& s, std::size_t n, std::size_t t1,
                      std::size_t td) {
    return stacked_mean(s, n, t1, td, 0);
}

inline Rat n_dep_mean(const BalancedTriple& t, std::size_t n, std::size_t t1,
                      std::size_t td) {
    return stacked_mean(t, n, t1, td, 0);
}

// ---------------------------------------------------------------------------
// E|Ker A_X^T| = sum over all (t1, td) of E[N_dep(t1, td)].
//
// Writing g|_{r=0}^n = 2^-n sum_i C(n,i) P^i M^{n-i} with
// P = (1+u)^jZ (1+v)^jD and M = (1-u)^jZ (1-v)^jD, the double sum
// factorizes per i, which keeps the evaluation O(n^2) instead of
// O(n^3). Coefficients of (1+u)^p (1-u)^q come from the exact recurrence
//   (A+1) c_{A+1} = (p-q) c_A + (A-1-p-q) c_{A-1}.
// ---------------------------------------------------------------------------
namespace detail {

inline std::vector<Int> pm_coeffs(unsigned p, unsigned q) {
    const unsigned deg = p + q;
    std::vector<Int> c(deg + 1);
    c[0] = 1;
    if (deg == 0) return c;
    c[1] = Int(static_cast<long>(p)) - static_cast<long>(q);
    for (unsigned A = 1; A < deg; ++A) {
        Int num = (Int(static_cast<long>(p)) - static_cast<long>(q)) * c[A] +
                  (Int(static_cast<long>(A)) - 1 - p - q) * c[A - 1];
        Int out;
        mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), A + 1);
        c[A + 1] = out;
    }
    return c;
}

inline Rat block_weight_sum(unsigned j, unsigned k, std::size_t n, unsigned i) {
    if (j == 0) return Rat(1);
    const unsigned m = static_cast<unsigned>(j * n / k);
    const std::vector<Int> cu = pm_coeffs(j * i, j * (static_cast<unsigned>(n) - i));
    Rat acc(0);
    for (unsigned t = 0; t <= m; ++t)
        acc += make_rat(binom(m, t) * cu[k * t], binom(j * n, k * t));
    return acc;
}

} // namespace detail

inline Rat ker_axt_mean_total(const StackedShape& s, std::size_t n) {
    const unsigned jz = s.j_Z, jd = s.j_Delta, k = s.k;
    if ((jz * n) % k != 0 || (jd * n) % k != 0)
        throw divisibility_error("ker_axt_mean_total: k must divide j*n");
    Rat acc(0);
    for (unsigned i = 0; i <= n; ++i) {
        const Rat u = detail::block_weight_sum(jz, k, n, i);
        const Rat v = detail::block_weight_sum(jd, k, n, i);
        acc += binom(n, i) * u * v;
    }
    Int two_n = 1;
    two_n <<= n;
    return acc / two_n;
}

inline Rat ker_axt_mean_total(const BalancedTriple& t, std::size_t n) {
    return ker_axt_mean_total(StackedShape::of(t), n);
}

// ---------------------------------------------------------------------------
// Monte Carlo oracle for the exact stacked formula. Canonical supports
// (first t1 rows of A_Z, first td rows of A_Delta, first w rows of B) are
// enough by exchangeability; the estimate times the support-count product
// is an unbiased estimate of E[N_X(t1, td, w)]. Samples full matrices from
// the unconditioned configuration model, independent of the coefficient
// extraction path it cross-checks.
// ---------------------------------------------------------------------------
struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

inline McResult mc_support_prob(const DegreeProfile& p, std::size_t t1, std::size_t td,
                                std::size_t w, std::size_t samples, std::uint64_t seed) {
    if (samples < 1000)
        throw domain_violation("mc_support_prob: at least 10^3 samples required");
    const RowCounts rc = row_counts(p);
    if (t1 > rc.m_Z || td > rc.m_Delta || w > p.n)
        throw domain_violation("mc_support_prob: weights exceed block dimensions");

    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.mode = SampleMode::Mod2Multigraph;

    std::size_t hits = 0;
    std::vector<std::uint64_t> acc((p.n + 63) / 64);
    for (std::size_t it = 0; it < samples; ++it) {
        const BitMatrix az = sample_regular(p.j_Z, p.k_Z, p.n, cfg, 3 * it);
        const BitMatrix ad = p.j_Delta
                                 ? sample_regular(p.j_Delta, p.k_Delta, p.n, cfg, 3 * it + 1)
                                 : BitMatrix(0, p.n);
        const BitMatrix b = sample_square(p.k, p.n, cfg, 3 * it + 2);

        std::fill(acc.begin(), acc.end(), 0);
        auto fold_row = [&](const BitMatrix& m, std::size_t r) {
            m.for_each_set(r, [&](std::size_t c) { acc[c >> 6] ^= 1ULL << (c & 63); });
        };
        for (std::size_t r = 0; r < t1; ++r) fold_row(az, r);
        for (std::size_t r = 0; r < td; ++r) fold_row(ad, r);
        for (std::size_t r = 0; r < w; ++r) fold_row(b, r);

        bool zero = true;
        for (const auto word : acc)
            if (word) { zero = false; break; }
        if (zero) ++hits;
    }
    McResult res;
    res.samples = samples;
    res.estimate = double(hits) / double(samples);
    res.std_error = std::sqrt(res.estimate * (1.0 - res.estimate) / double(samples));
    return res;
}

// ---------------------------------------------------------------------------
// Exact weight table of the span of a basis (rows of `basis`), by Gray-code
// enumeration. Also used by the distance reports.
// ---------------------------------------------------------------------------
inline std::vector<std::uint64_t> span_weight_table(const BitMatrix& basis,
                                                    std::size_t max_dim = 26) {
    const std::size_t dim = basis.rows(), n = basis.cols();
    if (dim > max_dim)
        throw too_large_error("span_weight_table: dimension " + std::to_string(dim) +
                              " exceeds cutoff " + std::to_string(max_dim));
    std::vector<std::uint64_t> table(n + 1, 0);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(dim * words, 0), cur(words, 0);
    for (std::size_t r = 0; r < dim; ++r)
        basis.for_each_set(r, [&](std::size_t c) { rows[r * words + (c >> 6)] |= 1ULL << (c & 63); });

    table[0] += 1; // zero word
    const std::uint64_t total = 1ULL << dim;
    for (std::uint64_t gray = 1; gray < total; ++gray) {
        const int bit = std::countr_zero(gray);
        std::size_t wt = 0;
        for (std::size_t wd = 0; wd < words; ++wd) {
            cur[wd] ^= rows[static_cast<std::size_t>(bit) * words + wd];
            wt += static_cast<std::size_t>(std::popcount(cur[wd]));
        }
        table[wt] += 1;
    }
    return table;
}

} // namespace cssgv

#endif
