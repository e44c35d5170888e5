#ifndef CSSGV_CSS_HPP
#define CSSGV_CSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cssgv/bigrat.hpp"
#include "cssgv/enumerators.hpp"
#include "cssgv/errors.hpp"
#include "cssgv/gf2.hpp"
#include "cssgv/profile.hpp"
#include "cssgv/sampler.hpp"

namespace cssgv {

// Apply M to a row vector: returns (M v^T)^T as a 1 x M.rows row vector.
inline BitMatrix vec_apply(const BitMatrix& m, const BitMatrix& v) {
    if (v.rows() != 1 || v.cols() != m.cols())
        throw dimension_error("vec_apply: v must be 1 x M.cols");
    BitMatrix out(1, m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool bit = false;
        m.for_each_set(r, [&](std::size_t c) { bit ^= v.get(0, c); });
        out.set(0, r, bit);
    }
    return out;
}

inline BitMatrix vec_xor(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != 1 || b.rows() != 1 || a.cols() != b.cols())
        throw dimension_error("vec_xor: operands must be equal-length row vectors");
    BitMatrix out = a;
    b.for_each_set(0, [&](std::size_t c) { out.flip(0, c); });
    return out;
}

// Independent rows spanning Row(M): nonzero rows of the RREF.
inline BitMatrix row_basis(const BitMatrix& m) {
    const RrefResult rr = rref(m);
    BitMatrix out(rr.pivots.size(), m.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        rr.mat.for_each_set(r, [&](std::size_t c) { out.set(r, c, true); });
    return out;
}

// ---------------------------------------------------------------------------
// One sampled realization of the nested family.
// ---------------------------------------------------------------------------
struct FamilyInstance {
    DegreeProfile profile;
    RowCounts counts;
    BitMatrix A_Z, A_Delta, A_X, B;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::Mod2Multigraph;
};

inline FamilyInstance build_instance(const DegreeProfile& p, const SamplerConfig& cfg) {
    FamilyInstance inst;
    inst.profile = p;
    inst.counts = row_counts(p);
    inst.seed = cfg.seed;
    inst.mode = cfg.mode;
    inst.A_Z = sample_regular(p.j_Z, p.k_Z, p.n, cfg, 0);
    inst.A_Delta = p.j_Delta ? sample_regular(p.j_Delta, p.k_Delta, p.n, cfg, 1)
                             : BitMatrix(0, p.n);
    inst.B = sample_square(p.k, p.n, cfg, 2);
    inst.A_X = vstack(inst.A_Z, inst.A_Delta);
    return inst;
}

// ---------------------------------------------------------------------------
// Extended parity-check matrices with hidden variables:
//   H'_Z = [A_Z 0; B I_n]  of shape (m_Z + n) x 2n,
//   H'_X = [A_X^T B^T]     of shape n x (m_X + n).
// ---------------------------------------------------------------------------
struct ExtendedPair {
    BitMatrix H_Z_ext, H_X_ext;
};

inline ExtendedPair extended_matrices(const FamilyInstance& inst) {
    const std::size_t n = inst.profile.n, mz = inst.counts.m_Z;
    ExtendedPair ext;
    ext.H_Z_ext = BitMatrix(mz + n, 2 * n);
    for (std::size_t r = 0; r < mz; ++r)
        inst.A_Z.for_each_set(r, [&](std::size_t c) { ext.H_Z_ext.set(r, c, true); });
    for (std::size_t r = 0; r < n; ++r) {
        inst.B.for_each_set(r, [&](std::size_t c) { ext.H_Z_ext.set(mz + r, c, true); });
        ext.H_Z_ext.set(mz + r, n + r, true);
    }
    ext.H_X_ext = hstack(inst.A_X.transpose(), inst.B.transpose());
    return ext;
}

// ---------------------------------------------------------------------------
// Compressed parity-check matrices (Fig. 3/4 shapes, no final RREF):
//   K_X = kernel basis of A_X,
//   H_X = K_X B^T,
//   H_Z = visible projection of a kernel basis of [A_Z^T B^T].
// A separate reduction step (affine_systems) produces full-row-rank
// representatives when right inverses are needed.
// ---------------------------------------------------------------------------
struct CompressedPair {
    BitMatrix H_Z, H_X, K_X;
};

inline std::size_t kernel_overlap_dim(const BitMatrix& a, const BitMatrix& b) {
    // dim(Ker a  n  Ker b) = cols - rank([a; b])
    return a.cols() - rank(vstack(a, b));
}

inline CompressedPair compressed_pair(const FamilyInstance& inst, bool verify = true) {
    CompressedPair cp;
    cp.K_X = kernel_basis(inst.A_X);
    cp.H_X = mul(cp.K_X, inst.B.transpose());
    const BitMatrix m = hstack(inst.A_Z.transpose(), inst.B.transpose());
    const BitMatrix ker = kernel_basis(m);
    cp.H_Z = ker.columns(inst.counts.m_Z, inst.counts.m_Z + inst.profile.n);

    if (verify) {
        const std::size_t n = inst.profile.n;
        const std::size_t lz = kernel_overlap_dim(inst.A_Z, inst.B);
        const std::size_t lx = kernel_overlap_dim(inst.A_X, inst.B);
        const std::size_t dim_cz = n - rank(inst.A_Z) - lz;
        const std::size_t dim_czax = n - rank(inst.A_X) - lx;
        // Row(H_Z) = C_Z^perp: orthogonality to the generators of
        // C_Z = B(Ker A_Z) plus the dimension identity.
        const BitMatrix gen_cz = mul(kernel_basis(inst.A_Z), inst.B.transpose());
        if (mul(cp.H_Z, gen_cz.transpose()).nnz() != 0)
            throw error("compressed_pair: H_Z not orthogonal to C_Z");
        if (rank(cp.H_Z) != n - dim_cz)
            throw error("compressed_pair: rank(H_Z) != n - dim C_Z");
        // Row(H_X) = B(Ker A_X): H_X rows are exactly the images of the
        // K_X basis, so containment is construction; check the dimension.
        if (rank(cp.H_X) != dim_czax)
            throw error("compressed_pair: rank(H_X) != dim C_Z(A_X)");
        if (mul(cp.H_X, cp.H_Z.transpose()).nnz() != 0)
            throw error("compressed_pair: H_X H_Z^T != 0");
    }
    return cp;
}

// ---------------------------------------------------------------------------
// CSS verification: H_X H_Z^T = 0 and every row of H_Z lies in C_X
// (equivalently B^T v in Row(A_X), per the nesting proof). Returns the
// first offending row index on failure; failure indicates an
// implementation bug, never an expected outcome.
// ---------------------------------------------------------------------------
struct CssCheck {
    bool ok = false;
    std::optional<std::size_t> counterexample_row;
};

// Low-level checker for a candidate compressed pair against the blocks it
// was built from; verify_css feeds it the instance's own pair, the test
// harness feeds it deliberately corrupted matrices.
inline CssCheck check_css_pair(const BitMatrix& H_X, const BitMatrix& H_Z,
                               const BitMatrix& A_X, const BitMatrix& B) {
    CssCheck res;
    if (mul(H_X, H_Z.transpose()).nnz() != 0) {
        res.counterexample_row = 0;
        return res;
    }
    for (std::size_t r = 0; r < H_Z.rows(); ++r) {
        const BitMatrix vb = vec_apply(B.transpose(), H_Z.row(r));
        if (!row_space_contains(A_X, vb)) {
            res.counterexample_row = r;
            return res;
        }
    }
    res.ok = true;
    return res;
}

inline CssCheck verify_css(const FamilyInstance& inst) {
    const CompressedPair cp = compressed_pair(inst, false);
    return check_css_pair(cp.H_X, cp.H_Z, inst.A_X, inst.B);
}

// ---------------------------------------------------------------------------
// Rate report (Prop. 2.1 dimension formulas + design rates).
// ---------------------------------------------------------------------------
struct RateReport {
    std::size_t rank_AZ = 0, rank_AX = 0, rank_B = 0;
    std::size_t L_Z = 0, L_X = 0;
    Rat R_Z, R_X, R_Q;
    Rat R_Z_des, R_X_des, R_Q_des;
};

inline RateReport rate_report(const FamilyInstance& inst) {
    RateReport rep;
    const std::size_t n = inst.profile.n;
    rep.rank_AZ = rank(inst.A_Z);
    rep.rank_AX = rank(inst.A_X);
    rep.rank_B = rank(inst.B);
    rep.L_Z = kernel_overlap_dim(inst.A_Z, inst.B);
    rep.L_X = kernel_overlap_dim(inst.A_X, inst.B);
    rep.R_Z = make_rat(Int(n) - rep.rank_AZ - rep.L_Z, Int(n));
    rep.R_X = make_rat(Int(rep.rank_AX + rep.L_X), Int(n));
    rep.R_Q = rep.R_X + rep.R_Z - 1;
    rep.R_Z_des = make_rat(Int(n - inst.counts.m_Z), Int(n));
    rep.R_X_des = make_rat(Int(inst.counts.m_X), Int(n));
    rep.R_Q_des = make_rat(Int(inst.counts.m_Delta), Int(n));
    return rep;
}

// ---------------------------------------------------------------------------
// Sparse affine representations of the syndrome equations. H_Z is
// deterministically row-reduced to a full-row-rank representative (the
// statement depends only on the row space); K_X is full row rank by
// construction.
// ---------------------------------------------------------------------------
struct AffineSystems {
    BitMatrix H_Z_red;  // full-row-rank compressed Z-check (RREF rows)
    BitMatrix H_X;      // K_X B^T
    BitMatrix K_X;
    BitMatrix Gamma_Z;  // H_Z_red Gamma_Z = I
    BitMatrix Gamma_X;  // K_X Gamma_X = I
    BitMatrix s_Z, s_X; // syndromes (row vectors)
    BitMatrix t_Z, t_X; // representatives Gamma s
};

inline AffineSystems affine_systems(const FamilyInstance& inst, const BitMatrix& s_Z,
                                    const BitMatrix& s_X) {
    const CompressedPair cp = compressed_pair(inst, false);
    AffineSystems sys;
    sys.H_Z_red = row_basis(cp.H_Z);
    sys.H_X = cp.H_X;
    sys.K_X = cp.K_X;
    if (sys.H_Z_red.rows() != 0 && rank(sys.H_Z_red) != sys.H_Z_red.rows())
        throw rank_deficient_error("affine_systems: H_Z reduction failed");
    sys.Gamma_Z = right_inverse(sys.H_Z_red);
    sys.Gamma_X = right_inverse(sys.K_X);
    if (s_Z.cols() != sys.H_Z_red.rows() || s_X.cols() != sys.K_X.rows())
        throw dimension_error("affine_systems: syndrome lengths must match reduced checks");
    sys.s_Z = s_Z;
    sys.s_X = s_X;
    sys.t_Z = vec_apply(sys.Gamma_Z, s_Z);
    sys.t_X = vec_apply(sys.Gamma_X, s_X);
    return sys;
}

// Z side, forward direction: f_X in Ker A_Z yields e_X = t_Z + B f_X with
// H_Z e_X = s_Z.
inline BitMatrix z_error_from_witness(const FamilyInstance& inst, const AffineSystems& sys,
                                      const BitMatrix& f_X) {
    return vec_xor(sys.t_Z, vec_apply(inst.B, f_X));
}

// Z side, converse: a witness f_X for a solution e_X of H_Z e_X = s_Z
// (solves A_Z f = 0, B f = e_X + t_Z).
inline std::optional<BitMatrix> z_witness(const FamilyInstance& inst,
                                          const AffineSystems& sys, const BitMatrix& e_X) {
    const BitMatrix target = vec_xor(e_X, sys.t_Z);
    BitMatrix rhs(1, inst.counts.m_Z + inst.profile.n);
    target.for_each_set(0, [&](std::size_t c) { rhs.set(0, inst.counts.m_Z + c, true); });
    return solve(vstack(inst.A_Z, inst.B), rhs);
}

// X side: a witness f_Z with B^T e_Z = t_X + A_X^T f_Z, if one exists.
inline std::optional<BitMatrix> x_witness(const FamilyInstance& inst,
                                          const AffineSystems& sys, const BitMatrix& e_Z) {
    const BitMatrix lhs = vec_apply(inst.B.transpose(), e_Z);
    const BitMatrix target = vec_xor(lhs, sys.t_X);
    return solve(inst.A_X.transpose(), target);
}

// ---------------------------------------------------------------------------
// Exhaustive distances (value nullopt encodes +infinity: empty difference
// set). d_Z_rel minimizes over C_Z \ C_Z(A_X), d_X_rel over C_X \ C_Z^perp.
// ---------------------------------------------------------------------------
struct DistanceReport {
    std::optional<std::size_t> d_CZ, d_CX;
    std::optional<std::size_t> d_Z_rel, d_X_rel;
};

namespace detail {

// Minimum weights over span(sub + ext) with membership tracking: a word
// lies in span(sub) iff its Gray combination uses no ext row.
struct RelScan {
    std::optional<std::size_t> d_code, d_rel;
};

inline RelScan rel_scan(const BitMatrix& sub_basis, const BitMatrix& ext_rows,
                        std::size_t max_dim) {
    const std::size_t ds = sub_basis.rows(), de = ext_rows.rows();
    const std::size_t dim = ds + de, n = sub_basis.cols();
    if (dim > max_dim)
        throw too_large_error("rel_scan: kernel dimension exceeds cutoff");
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(dim * words, 0), cur(words, 0);
    auto load = [&](const BitMatrix& m, std::size_t r, std::size_t idx) {
        m.for_each_set(r, [&](std::size_t c) { rows[idx * words + (c >> 6)] |= 1ULL << (c & 63); });
    };
    for (std::size_t r = 0; r < ds; ++r) load(sub_basis, r, r);
    for (std::size_t r = 0; r < de; ++r) load(ext_rows, r, ds + r);
    std::uint64_t ext_mask = 0;
    for (std::size_t i = 0; i < de; ++i) ext_mask |= 1ULL << (ds + i);

    RelScan out;
    const std::uint64_t total = 1ULL << dim;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int bit = std::countr_zero(g);
        std::size_t wt = 0;
        for (std::size_t wd = 0; wd < words; ++wd) {
            cur[wd] ^= rows[static_cast<std::size_t>(bit) * words + wd];
            wt += static_cast<std::size_t>(std::popcount(cur[wd]));
        }
        if (wt == 0) continue;
        if (!out.d_code || wt < *out.d_code) out.d_code = wt;
        const std::uint64_t comb = g ^ (g >> 1);
        if ((comb & ext_mask) != 0 && (!out.d_rel || wt < *out.d_rel)) out.d_rel = wt;
    }
    return out;
}

// Rows of `cand` independent of Row(base), making span(base + result) =
// span(base + cand). Deterministic scan order.
inline BitMatrix independent_extension(const BitMatrix& base, const BitMatrix& cand) {
    BitMatrix acc = base;
    std::vector<std::size_t> take;
    std::size_t r0 = rank(base);
    for (std::size_t r = 0; r < cand.rows(); ++r) {
        const BitMatrix trial = vstack(acc, cand.row(r));
        if (rank(trial) > r0) {
            acc = trial;
            ++r0;
            take.push_back(r);
        }
    }
    BitMatrix out(take.size(), cand.cols());
    for (std::size_t i = 0; i < take.size(); ++i)
        cand.for_each_set(take[i], [&](std::size_t c) { out.set(i, c, true); });
    return out;
}

} // namespace detail

inline DistanceReport brute_distances(const FamilyInstance& inst,
                                      std::size_t max_kernel_dim = 26) {
    const CompressedPair cp = compressed_pair(inst, false);
    DistanceReport rep;

    // Z side: C_Z = B(Ker A_Z), subcode C_Z(A_X) = B(Ker A_X) = Row(H_X).
    const BitMatrix gen_cz = row_basis(mul(kernel_basis(inst.A_Z), inst.B.transpose()));
    const BitMatrix sub_z = row_basis(cp.H_X);
    const BitMatrix ext_z = detail::independent_extension(sub_z, gen_cz);
    const detail::RelScan z = detail::rel_scan(sub_z, ext_z, max_kernel_dim);
    rep.d_CZ = z.d_code;
    rep.d_Z_rel = z.d_rel;

    // X side: C_X = Ker H_X, subcode C_Z^perp = Row(H_Z).
    const BitMatrix gen_cx = kernel_basis(cp.H_X);
    const BitMatrix sub_x = row_basis(cp.H_Z);
    const BitMatrix ext_x = detail::independent_extension(sub_x, gen_cx);
    const detail::RelScan x = detail::rel_scan(sub_x, ext_x, max_kernel_dim);
    rep.d_CX = x.d_code;
    rep.d_X_rel = x.d_rel;
    return rep;
}

// ---------------------------------------------------------------------------
// Instance-level exact weight tables (first-moment oracles).
// ---------------------------------------------------------------------------
enum class WeightTarget { C_Z, C_X, KerB, KerAXLeft };

inline std::vector<std::uint64_t> brute_weight_enum(const FamilyInstance& inst,
                                                    WeightTarget which,
                                                    std::size_t max_kernel_dim = 26) {
    switch (which) {
        case WeightTarget::C_Z:
            return span_weight_table(
                row_basis(mul(kernel_basis(inst.A_Z), inst.B.transpose())), max_kernel_dim);
        case WeightTarget::C_X: {
            const CompressedPair cp = compressed_pair(inst, false);
            return span_weight_table(kernel_basis(cp.H_X), max_kernel_dim);
        }
        case WeightTarget::KerB:
            return span_weight_table(kernel_basis(inst.B), max_kernel_dim);
        case WeightTarget::KerAXLeft:
            return span_weight_table(kernel_basis(inst.A_X.transpose()), max_kernel_dim);
    }
    throw domain_violation("brute_weight_enum: unknown target");
}

} // namespace cssgv

#endif
