#include <catch2/catch_amalgamated.hpp>

#include "cssgv/css.hpp"

using namespace cssgv;

namespace {

const DegreeProfile example21{3, 8, 2, 8, 2, 40};

FamilyInstance make_inst(const DegreeProfile& p, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.seed = seed;
    return build_instance(p, cfg);
}

} // namespace

TEST_CASE("instance shapes", "[css]") {
    const FamilyInstance inst = make_inst(example21, 7);
    CHECK(inst.A_Z.rows() == 15);
    CHECK(inst.A_Delta.rows() == 10);
    CHECK(inst.A_X.rows() == 25);
    CHECK(inst.B.rows() == 40);
    CHECK(inst.A_X.cols() == 40);

    const FamilyInstance hom = make_inst(BalancedTriple{4, 6, 10}.profile(10), 8);
    CHECK(hom.A_Z.rows() == 4);
    CHECK(hom.A_Delta.rows() == 2);
    CHECK(hom.A_X.rows() == 6);
    CHECK(hom.B.rows() == 10);

    // boundary: A_Delta disappears, A_X = A_Z
    const FamilyInstance bd = make_inst(BalancedTriple{4, 4, 8}.profile(16), 9);
    CHECK(bd.A_Delta.rows() == 0);
    CHECK(bd.A_X == bd.A_Z);
}

TEST_CASE("nesting holds by stacking", "[css]") {
    const FamilyInstance inst = make_inst(example21, 11);
    for (std::size_t r = 0; r < inst.A_Z.rows(); ++r)
        CHECK(row_space_contains(inst.A_X, inst.A_Z.row(r)));
}

TEST_CASE("extended matrices: shapes, nnz, kernel", "[css]") {
    SamplerConfig cfg;
    cfg.seed = 3;
    cfg.mode = SampleMode::SimpleGraph;
    const FamilyInstance inst = build_instance(example21, cfg);
    const ExtendedPair ext = extended_matrices(inst);
    CHECK(ext.H_Z_ext.rows() == 55);
    CHECK(ext.H_Z_ext.cols() == 80);
    CHECK(ext.H_X_ext.rows() == 40);
    CHECK(ext.H_X_ext.cols() == 65);
    // nnz(H'_Z) = j_Z n + k n + n and nnz(H'_X) = j_X n + k n in simple mode
    CHECK(ext.H_Z_ext.nnz() == 3 * 40 + 2 * 40 + 40);
    CHECK(ext.H_X_ext.nnz() == 5 * 40 + 2 * 40);
    // the zero visible vector extends by w = 0
    const BitMatrix zero_ext(1, ext.H_X_ext.cols());
    CHECK(mul(ext.H_X_ext, zero_ext.transpose()).nnz() == 0);
}

TEST_CASE("compressed pair invariants", "[css]") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const FamilyInstance inst = make_inst(example21, seed);
        const CompressedPair cp = compressed_pair(inst); // internal verification on
        CHECK(mul(cp.H_X, cp.H_Z.transpose()).nnz() == 0);
        CHECK(mul(inst.A_X, cp.K_X.transpose()).nnz() == 0);
        CHECK(cp.H_Z.cols() == 40);
        CHECK(cp.H_X.cols() == 40);
    }
}

TEST_CASE("compressed pair with B = I reduces to the kernel basis", "[css]") {
    FamilyInstance inst = make_inst(example21, 5);
    inst.B = BitMatrix::identity(40); // test-only injection
    const CompressedPair cp = compressed_pair(inst, false);
    CHECK(cp.H_X == cp.K_X);
}

TEST_CASE("verify_css on sampled and corrupted pairs", "[css]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const FamilyInstance inst = make_inst(example21, seed);
        CHECK(verify_css(inst).ok);
    }
    const FamilyInstance inst = make_inst(example21, 99);
    CompressedPair cp = compressed_pair(inst, false);
    cp.H_X.flip(0, 0);
    const CssCheck bad = check_css_pair(cp.H_X, cp.H_Z, inst.A_X, inst.B);
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample_row.has_value());
}

TEST_CASE("boundary instance: C_Z^perp = C_X as containment", "[css]") {
    for (std::uint64_t seed : {4ULL, 5ULL}) {
        const FamilyInstance inst = make_inst(BalancedTriple{3, 3, 6}.profile(32), seed);
        CHECK(verify_css(inst).ok);
        const CompressedPair cp = compressed_pair(inst, false);
        // boundary: Ker A_X = Ker A_Z, so C_Z(A_X) = C_Z and the pair
        // degenerates to C_Z^perp = C_X. Containment of the generators is
        // H_X H_Z^T = 0; equality needs dim C_Z^perp = dim C_X, i.e.
        // rank H_Z = n - rank H_X.
        CHECK(mul(cp.H_X, cp.H_Z.transpose()).nnz() == 0);
        CHECK(rank(cp.H_Z) == 32 - rank(cp.H_X));
    }
}

TEST_CASE("rate report: design values and Prop 2.1 identities", "[css]") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FamilyInstance inst = make_inst(example21, seed);
        const RateReport rep = rate_report(inst);
        CHECK(rep.R_Z_des == make_rat(5, 8));
        CHECK(rep.R_X_des == make_rat(5, 8));
        CHECK(rep.R_Q_des == make_rat(1, 4));
        CHECK(rep.R_Q == rep.R_X + rep.R_Z - 1);
        CHECK(rep.L_X <= rep.L_Z);
        // dim C_Z = n - rank A_Z - L_Z against the generator matrix
        const std::size_t dim_cz =
            row_basis(mul(kernel_basis(inst.A_Z), inst.B.transpose())).rows();
        CHECK(Rat(dim_cz) == Rat(40) * rep.R_Z);
        // dim C_X = rank A_X + L_X against the kernel of H_X
        const CompressedPair cp = compressed_pair(inst, false);
        const std::size_t dim_cx = kernel_basis(cp.H_X).rows();
        CHECK(Rat(dim_cx) == Rat(40) * rep.R_X);
    }
    const FamilyInstance hom = make_inst(BalancedTriple{4, 6, 10}.profile(20), 17);
    CHECK(rate_report(hom).R_Q_des == make_rat(1, 5));
}

TEST_CASE("affine systems: representatives and forward direction", "[css]") {
    const FamilyInstance inst = make_inst(example21, 21);
    const CompressedPair cp = compressed_pair(inst, false);
    const std::size_t rz = rank(cp.H_Z);
    const std::size_t rx = cp.K_X.rows();

    // zero syndromes: t = 0 and e_X = B f_X solves the system
    AffineSystems sys = affine_systems(inst, BitMatrix(1, rz), BitMatrix(1, rx));
    CHECK(mul(sys.H_Z_red, sys.Gamma_Z) == BitMatrix::identity(rz));
    CHECK(mul(sys.K_X, sys.Gamma_X) == BitMatrix::identity(rx));
    CHECK(sys.t_Z.nnz() == 0);
    CHECK(sys.t_X.nnz() == 0);

    const BitMatrix kz = kernel_basis(inst.A_Z);
    for (std::size_t r = 0; r < std::min<std::size_t>(kz.rows(), 8); ++r) {
        const BitMatrix e = z_error_from_witness(inst, sys, kz.row(r));
        CHECK(vec_apply(sys.H_Z_red, e).nnz() == 0);
    }

    // random syndromes: 100 random f_X in Ker A_Z give solutions
    Xoshiro256pp rng(404);
    BitMatrix s_Z(1, rz), s_X(1, rx);
    for (std::size_t c = 0; c < rz; ++c) s_Z.set(0, c, rng.next() & 1);
    for (std::size_t c = 0; c < rx; ++c) s_X.set(0, c, rng.next() & 1);
    sys = affine_systems(inst, s_Z, s_X);
    for (int it = 0; it < 100; ++it) {
        BitMatrix coeff(1, kz.rows());
        for (std::size_t c = 0; c < kz.rows(); ++c) coeff.set(0, c, rng.next() & 1);
        const BitMatrix f_X = mul(coeff, kz);
        const BitMatrix e = z_error_from_witness(inst, sys, f_X);
        CHECK(vec_apply(sys.H_Z_red, e) == s_Z);
    }
}

TEST_CASE("affine systems: exhaustive equivalence at n = 16", "[css]") {
    const DegreeProfile p{3, 8, 2, 8, 2, 16};
    const FamilyInstance inst = make_inst(p, 31);
    const CompressedPair cp = compressed_pair(inst, false);
    const std::size_t rz = rank(cp.H_Z), rx = cp.K_X.rows();

    Xoshiro256pp rng(505);
    BitMatrix s_Z(1, rz), s_X(1, rx);
    for (std::size_t c = 0; c < rz; ++c) s_Z.set(0, c, rng.next() & 1);
    for (std::size_t c = 0; c < rx; ++c) s_X.set(0, c, rng.next() & 1);
    const AffineSystems sys = affine_systems(inst, s_Z, s_X);

    // Z side: every solution of H_Z e = s_Z has a witness f in Ker A_Z
    // with e = t_Z + B f, and conversely.
    std::size_t solutions = 0;
    for (std::uint32_t bits = 0; bits <= 0xFFFFu; ++bits) {
        BitMatrix e(1, 16);
        for (std::size_t c = 0; c < 16; ++c) e.set(0, c, (bits >> c) & 1u);
        const bool solves = vec_apply(sys.H_Z_red, e) == s_Z;
        const auto wit = z_witness(inst, sys, e);
        REQUIRE(solves == wit.has_value());
        if (solves) {
            ++solutions;
            CHECK(vec_apply(inst.A_Z, *wit).nnz() == 0);
            CHECK(vec_xor(sys.t_Z, vec_apply(inst.B, *wit)) == e);
        }
    }
    CHECK(solutions == (1u << (16 - rz)));

    // X side: H_X e_Z = s_X iff B^T e_Z = t_X + A_X^T f_Z for some f_Z.
    for (std::uint32_t bits = 0; bits <= 0xFFFFu; ++bits) {
        BitMatrix e(1, 16);
        for (std::size_t c = 0; c < 16; ++c) e.set(0, c, (bits >> c) & 1u);
        const bool solves = vec_apply(cp.H_X, e) == s_X;
        const auto wit = x_witness(inst, sys, e);
        REQUIRE(solves == wit.has_value());
        if (solves) {
            const BitMatrix lhs = vec_apply(inst.B.transpose(), e);
            const BitMatrix rhs = vec_xor(sys.t_X, vec_apply(inst.A_X.transpose(), *wit));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("brute distances", "[css]") {
    const DegreeProfile p{3, 8, 2, 8, 2, 16};
    for (std::uint64_t seed : {41ULL, 42ULL}) {
        const FamilyInstance inst = make_inst(p, seed);
        const DistanceReport rep = brute_distances(inst);
        if (rep.d_CZ && rep.d_Z_rel) CHECK(*rep.d_Z_rel >= *rep.d_CZ);
        if (rep.d_CX && rep.d_X_rel) CHECK(*rep.d_X_rel >= *rep.d_CX);
    }
    // boundary family: C_Z(A_X) = C_Z, so the Z-side difference set is empty
    const FamilyInstance bd = make_inst(BalancedTriple{3, 3, 6}.profile(16), 43);
    const DistanceReport rep = brute_distances(bd);
    CHECK_FALSE(rep.d_Z_rel.has_value());
}

TEST_CASE("brute weight tables", "[css]") {
    SamplerConfig cfg;
    cfg.seed = 51;
    cfg.mode = SampleMode::SimpleGraph;
    const FamilyInstance inst = build_instance(BalancedTriple{2, 2, 4}.profile(12), cfg);
    // even k: all-ones lies in Ker B
    const auto kerb = brute_weight_enum(inst, WeightTarget::KerB);
    CHECK(kerb[12] >= 1);
    // outer kernel symmetry A_o(s) = A_o(n-s) for even row degree
    const auto outer = span_weight_table(kernel_basis(inst.A_Z));
    for (std::size_t s = 0; s <= 12; ++s) CHECK(outer[s] == outer[12 - s]);
}
