#pragma once
/**
 * @file   counter_rng.hpp
 * @brief  Stateless counter-based random numbers: every draw is a pure function of its integer key.
 *
 * The mixer is the SplitMix64 finalizer, chained over the key fields. Identical keys give identical draws on every
 * platform, and draws for different keys can be computed in any order.
 */

#include <cstdint>
#include <initializer_list>

namespace lcflow
{
    [[nodiscard]] constexpr std::uint64_t splitmix64 (std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    [[nodiscard]] constexpr std::uint64_t hash_key (std::initializer_list<std::uint64_t> fields) noexcept
    {
        std::uint64_t h = 0x6A09E667F3BCC909ULL;
        for (std::uint64_t f : fields)
            h = splitmix64 (h ^ splitmix64 (f));
        return h;
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    [[nodiscard]] constexpr double unit_uniform (std::uint64_t bits) noexcept
    {
        return static_cast<double> (bits >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi) for the given key.
    [[nodiscard]] constexpr double keyed_uniform (double lo, double hi, std::initializer_list<std::uint64_t> key) noexcept
    {
        return lo + (hi - lo) * unit_uniform (hash_key (key));
    }
} // namespace lcflow
