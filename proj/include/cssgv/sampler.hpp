#ifndef CSSGV_SAMPLER_HPP
#define CSSGV_SAMPLER_HPP

#include <numeric>
#include <vector>

#include "cssgv/errors.hpp"
#include "cssgv/gf2.hpp"
#include "cssgv/profile.hpp"
#include "cssgv/rng.hpp"

namespace cssgv {

namespace detail {

// One configuration-model draw: j sockets per column, k_row sockets per
// row, matched by a uniformly random permutation. Returns false in
// SimpleGraph mode when some (row, column) pair receives two or more
// edges; the mod-2 matrix is filled either way.
inline bool draw_configuration(unsigned j, unsigned k_row, std::size_t n,
                               std::size_t m, SampleMode mode,
                               Xoshiro256pp& rng, BitMatrix& out) {
    const std::size_t sockets = j * n;
    std::vector<std::uint32_t> row_socket(sockets);
    std::iota(row_socket.begin(), row_socket.end(), 0);
    fisher_yates(row_socket, rng);

    out = BitMatrix(m, n);
    bool simple = true;
    // seen(r,c) marks cells that already received one edge.
    BitMatrix seen(mode == SampleMode::SimpleGraph ? m : 0,
                   mode == SampleMode::SimpleGraph ? n : 0);
    for (std::size_t i = 0; i < sockets; ++i) {
        const std::size_t c = i / j;
        const std::size_t r = row_socket[i] / k_row;
        out.flip(r, c);
        if (mode == SampleMode::SimpleGraph) {
            if (seen.get(r, c)) simple = false;
            seen.set(r, c, true);
        }
    }
    return simple;
}

} // namespace detail

// (j, k_row)-regular draw from the socket-based configuration model.
// Mod2Multigraph reduces multi-edges mod 2 (the unconditioned model the
// exact enumerators describe); SimpleGraph resamples until the matching is
// simple, preserving exact uniformity over simple graphs.
inline BitMatrix sample_regular(unsigned j, unsigned k_row, std::size_t n,
                                const SamplerConfig& cfg,
                                std::uint64_t stream_id = 0) {
    if (j == 0 || k_row == 0 || n == 0)
        throw domain_violation("sample_regular: degrees and n must be positive");
    if ((j * n) % k_row != 0)
        throw divisibility_error("sample_regular: k_row does not divide j*n");
    const std::size_t m = j * n / k_row;

    Xoshiro256pp rng(cfg.seed, stream_id);
    BitMatrix out;
    if (cfg.mode == SampleMode::Mod2Multigraph) {
        detail::draw_configuration(j, k_row, n, m, cfg.mode, rng, out);
        return out;
    }
    for (std::size_t attempt = 0; attempt < cfg.max_rejections; ++attempt) {
        if (detail::draw_configuration(j, k_row, n, m, cfg.mode, rng, out))
            return out;
    }
    throw rejection_limit_error("sample_regular: no simple graph after " +
                                std::to_string(cfg.max_rejections) + " attempts");
}

// Square (k, k)-regular draw.
inline BitMatrix sample_square(unsigned k, std::size_t n, const SamplerConfig& cfg,
                               std::uint64_t stream_id = 0) {
    return sample_regular(k, k, n, cfg, stream_id);
}

} // namespace cssgv

#endif
