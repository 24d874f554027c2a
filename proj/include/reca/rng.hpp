#pragma once

#include <cstdint>
#include <random>

namespace reca {

// All randomness flows through std::mt19937_64, whose output sequence is
// fixed by the standard. Bounded draws use rejection sampling rather than
// std::uniform_int_distribution so that results do not depend on the
// standard library implementation.
using Engine = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = Engine::max() - Engine::max() % bound;
    std::uint64_t x;
    do {
        x = engine();
    } while (x >= limit);
    return x % bound;
}

/// splitmix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace reca
