#ifndef CSSGV_PROFILE_HPP
#define CSSGV_PROFILE_HPP

#include <cstdint>
#include <string>

#include "cssgv/errors.hpp"

namespace cssgv {

// Degree parameters of the nested family. A_Z is (j_Z, k_Z)-regular,
// A_Delta is (j_Delta, k_Delta)-regular, B is the square (k, k)-regular
// map. j_Delta = 0 is the zero-quantum-rate boundary where A_Delta
// disappears.
struct DegreeProfile {
    unsigned j_Z = 0, k_Z = 0;
    unsigned j_Delta = 0, k_Delta = 0;
    unsigned k = 0;
    std::size_t n = 0;
};

struct RowCounts {
    std::size_t m_Z = 0, m_Delta = 0, m_X = 0;
};

inline RowCounts row_counts(const DegreeProfile& p) {
    if (p.j_Z == 0 || p.k_Z == 0 || p.k == 0 || p.n == 0)
        throw domain_violation("row_counts: j_Z, k_Z, k, n must be positive");
    if ((p.j_Z * p.n) % p.k_Z != 0)
        throw divisibility_error("row_counts: k_Z does not divide j_Z*n (" +
                                 std::to_string(p.k_Z) + " | " +
                                 std::to_string(p.j_Z * p.n) + " fails)");
    RowCounts rc;
    rc.m_Z = p.j_Z * p.n / p.k_Z;
    if (p.j_Delta > 0) {
        if (p.k_Delta == 0)
            throw domain_violation("row_counts: k_Delta must be positive when j_Delta > 0");
        if ((p.j_Delta * p.n) % p.k_Delta != 0)
            throw divisibility_error("row_counts: k_Delta does not divide j_Delta*n (" +
                                     std::to_string(p.k_Delta) + " | " +
                                     std::to_string(p.j_Delta * p.n) + " fails)");
        rc.m_Delta = p.j_Delta * p.n / p.k_Delta;
    }
    rc.m_X = rc.m_Z + rc.m_Delta;
    return rc;
}

// Balanced triple (j_Z, j_X, k) with j_X + j_Z = k. The boundary triples
// (j, j, 2j) have j_Delta = 0.
struct BalancedTriple {
    unsigned j_Z = 0, j_X = 0, k = 0;

    unsigned j_Delta() const { return j_X - j_Z; }
    double alpha_Z() const { return double(j_Z) / k; }
    double alpha_Delta() const { return double(j_Delta()) / k; }
    double alpha_X() const { return double(j_X) / k; }
    bool boundary() const { return j_Z == j_X; }

    void validate() const {
        if (j_Z == 0 || j_X == 0 || k == 0)
            throw domain_violation("BalancedTriple: degrees must be positive");
        if (j_Z + j_X != k)
            throw domain_violation("BalancedTriple: j_X + j_Z = k required");
        if (j_Z > j_X)
            throw domain_violation("BalancedTriple: j_Z <= j_X required");
    }

    // Homogeneous profile at blocklength n (k_Z = k_Delta = k).
    DegreeProfile profile(std::size_t n) const {
        return DegreeProfile{j_Z, k, j_Delta(), k, k, n};
    }

    std::string str() const {
        return "(" + std::to_string(j_Z) + "," + std::to_string(j_X) + "," +
               std::to_string(k) + ")";
    }
};

enum class SampleMode { Mod2Multigraph, SimpleGraph };

struct SamplerConfig {
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::Mod2Multigraph;
    std::size_t max_rejections = 10000;
};

} // namespace cssgv

#endif
