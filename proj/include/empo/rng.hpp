#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace empo {

// Deterministic 64-bit generator. Backed by std::mt19937_64, whose output
// sequence is fixed by the standard, so a seed reproduces the same stream on
// every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1): top 53 bits scaled by 2^-53, so 1.0 is unreachable.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); zero draws are redrawn.
    double next_unit_nonzero() {
        double u = next_unit();
        while (u == 0.0)
            u = next_unit();
        return u;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace empo
