#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace et {

// splitmix64 finalizer; used to derive independent seed streams from one
// master seed so that replays are exact regardless of thread scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Named sub-streams of a master seed. Every source of randomness in a run
// is keyed by one of these, so the draw order of one stream cannot perturb
// another.
enum class Stream : std::uint64_t {
    init = 1,
    selection = 2,
    variation = 3,
    germline = 4,
    examples = 5,
    develop = 6,
    evolve = 7,
    run = 8,
};

inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t w : words) h = splitmix64(h ^ (w * 0x9E3779B97F4A7C15ULL));
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, Stream s) {
    return derive_seed(base, {static_cast<std::uint64_t>(s)});
}

inline std::uint64_t derive_seed(std::uint64_t base, Stream s, std::uint64_t a, std::uint64_t b = 0) {
    return derive_seed(base, {static_cast<std::uint64_t>(s), a, b});
}

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform in the open interval (0,1); redraws the (measure-zero) endpoint.
inline double uniform_open01(Rng& rng) {
    double u = uniform01(rng);
    while (u <= 0.0) u = uniform01(rng);
    return u;
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace et
