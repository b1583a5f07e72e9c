#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netautoma {

// All randomness in the library flows through this wrapper. The engine is
// std::mt19937_64, whose output sequence is pinned by the C++ standard, and
// every draw below is implemented by hand because the standard *distributions*
// are implementation-defined. Same seed, same bytes, on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). Rejection sampling to remove modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        // largest multiple of bound that fits in 64 bits
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real01() < p; }

    bool next_bit() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

// One master seed fans out to independent per-scope streams. The scheme is
// fixed: three rounds of splitmix64 over (master ^ fnv1a(scope), a, b).
// Re-running any stage with the same master seed reproduces it exactly.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view scope,
                                           std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = detail::splitmix64(master ^ detail::fnv1a64(scope));
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ b);
    return h;
}

}  // namespace netautoma
