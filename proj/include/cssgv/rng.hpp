#ifndef CSSGV_RNG_HPP
#define CSSGV_RNG_HPP

#include <cstdint>
#include <vector>

namespace cssgv {

// SplitMix64 (Steele, Lea, Flood 2014). Used for stream derivation and to
// seed the main generator.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman, Vigna 2019), seeded through SplitMix64.
// Streams are derived as hash(seed, stream_id), so sampling is pure given
// (parameters, seed, stream_id) and independent of scheduling.
class Xoshiro256pp {
public:
    Xoshiro256pp(std::uint64_t seed, std::uint64_t stream_id = 0) {
        SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1)));
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased draw from {0, ..., n-1} by rejection; platform-independent.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = n == 0 ? 0 : (0ULL - n) % n; // 2^64 mod n
        std::uint64_t x;
        do {
            x = next();
        } while (x < limit);
        return x % n;
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Fisher-Yates with our own bounded draws; std::shuffle is not
// reproducible across standard library implementations.
template <typename T>
void fisher_yates(std::vector<T>& v, Xoshiro256pp& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace cssgv

#endif
