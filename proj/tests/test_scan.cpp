#include <catch2/catch_amalgamated.hpp>

#include "cssgv/scan.hpp"

using namespace cssgv;

TEST_CASE("window enumeration", "[scan]") {
    const auto triples = enumerate_window_triples();
    CHECK(triples.size() == 190);
    std::size_t certified_shape = 0;
    for (const auto& t : triples) {
        CHECK(in_window(t));
        CHECK(t.j_X == t.k - t.j_Z);
        CHECK(2 * t.j_Z < t.k);
        if (t.k % 2 == 0 && t.j_Z >= 4) ++certified_shape;
    }
    CHECK(certified_shape == 56);
    CHECK(in_window(BalancedTriple{4, 6, 10}));
    CHECK_FALSE(in_window(BalancedTriple{6, 6, 12}));  // j_Z = k/2 violates strictness
    CHECK_FALSE(in_window(BalancedTriple{11, 13, 24})); // j_Z > 10
}

TEST_CASE("gv targets on the certified set", "[scan]") {
    ClassifyOptions co;
    co.with_proxies = false;
    for (const auto& t : enumerate_window_triples()) {
        if (t.k % 2 != 0 || t.j_Z < 4) continue;
        const ScanRecord rec = classify(t, co);
        CHECK(rec.category == Category::CertifiedGV);
        CHECK(std::fabs(rec.gv_css - rec.gv_classical) <= 1e-10);
        CHECK(rec.R_Q_des == Catch::Approx(1.0 - 2.0 * t.alpha_Z()));
    }
}

TEST_CASE("gv monotonicity within fixed k", "[scan]") {
    for (unsigned k : {10u, 20u, 30u}) {
        double prev = 0.0;
        for (unsigned jz = 1; 2 * jz < k && jz <= 10; ++jz) {
            const double gv = binary_entropy_inv(double(jz) / k);
            CHECK(gv > prev);
            prev = gv;
        }
    }
}

TEST_CASE("classification of representative triples", "[scan][proxy]") {
    // certified
    CHECK(classify(BalancedTriple{4, 6, 10}).category == Category::CertifiedGV);
    // zero proxy at j_Z <= 2
    CHECK(classify(BalancedTriple{2, 8, 10}).category == Category::ZeroProxy);
    // the near-GV triangular point
    const ScanRecord r347 = classify(BalancedTriple{3, 4, 7});
    CHECK(r347.category == Category::NearGV);
    CHECK(r347.certificates[0].status == CertStatus::Refused);
    // a clearly non-GV j_Z = 3 triple
    CHECK(classify(BalancedTriple{3, 5, 8}).category == Category::PositiveNonGV);
}

TEST_CASE("table emission shape and determinism", "[scan]") {
    EmitOptions eo; // timestamp off by default in-library
    const std::string d1 = emit_table(TableId::F, eo);
    const std::string d2 = emit_table(TableId::F, eo);
    CHECK(d1 == d2);
    // one metadata line + header + 12 rows
    CHECK(std::count(d1.begin(), d1.end(), '\n') == 14);
    CHECK(d1.find("# cssgv") == 0);
    // every row certifies on both sides
    CHECK(std::count(d1.begin(), d1.end(), 'C') >= 24); // "Certified" twice per row
    std::size_t pos = 0, fails = 0;
    while ((pos = d1.find(",0\n", pos)) != std::string::npos) { ++fails; ++pos; }
    CHECK(fails == 0);
}

TEST_CASE("figure data structure", "[scan]") {
    std::vector<ScanRecord> recs(2);
    recs[0].triple = {4, 6, 10};
    recs[0].R_Q_des = 0.2;
    recs[0].proxy_min = 0.0794;
    recs[0].category = Category::CertifiedGV;
    recs[1].triple = {1, 9, 10};
    recs[1].category = Category::ZeroProxy; // omitted from the figure
    const std::string csv = emit_figure_data(recs);
    CHECK(csv.find("4,6,10,") != std::string::npos);
    CHECK(csv.find("1,9,10") == std::string::npos);
    CHECK(csv.find(",curve") != std::string::npos);
    // curve endpoints: R = 0 -> h2inv(1/2), R = 1 -> 0
    CHECK(csv.find("0.1100278") != std::string::npos);
    // header present exactly once
    CHECK(csv.find("j_Z,j_X,k,R_Q_des,proxy_min,gv_curve_value,category") != std::string::npos);
}
