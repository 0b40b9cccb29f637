#pragma once

#include <cmath>
#include <cstdint>

namespace kinetic {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// xoshiro256++ with counter-based substream derivation. Replicate i of a run
// seeded with s always sees the stream RandomStream(s, i), independent of
// thread scheduling, so ensembles are reproducible bit-for-bit.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t mix = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        s_[0] = detail::splitmix64(mix);
        s_[1] = detail::splitmix64(mix);
        s_[2] = detail::splitmix64(mix);
        s_[3] = detail::splitmix64(mix);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is invalid
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl64(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1); safe as a log() argument.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on (-1,1).
    double uniform_signed() { return 2.0 * uniform() - 1.0; }

    // Uniform index in [0, n). Multiply-shift; modulo bias is n/2^64.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool coin() { return (next_u64() >> 63) != 0; }

    // Standard normal via Marsaglia polar; one value cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = uniform_signed();
            v = uniform_signed();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        have_cached_ = true;
        return u * f;
    }

    double exponential() { return -std::log(uniform_open()); }

private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace kinetic
