#pragma once

#include <cstdint>
#include <random>

namespace dsta {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for the stream identified by (master, a, b); streams are independent of draw order elsewhere.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(splitmix64(master) ^ a) ^ (b * 0xD6E8FEB86659FD93ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    template <typename Int>
    Int uniform(Int lo, Int hi) {
        return std::uniform_int_distribution<Int>(lo, hi)(engine_);
    }

    // Uniform index in [0, count).
    std::size_t index(std::size_t count) { return uniform<std::size_t>(0, count - 1); }

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return unit() < p;
    }

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace dsta
