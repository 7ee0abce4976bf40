#pragma once

#include <cstdint>
#include <initializer_list>

namespace rfcbf {

/// splitmix64 generator. Tiny, fast, and identical on every platform,
/// which the seed-determinism guarantees depend on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Collapses (seed, path...) into one stream key. Streams derived from
/// distinct paths are independent, so work items can run in any order
/// without changing what each one draws.
inline std::uint64_t derive_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = seed;
    for (std::uint64_t p : path) {
        h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        SplitMix64 mix(h);
        h = mix.next();
    }
    return h;
}

}  // namespace rfcbf
