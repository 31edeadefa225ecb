#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "projmotif/errors.hpp"

namespace projmotif {

/// SplitMix64 output function. Used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for the index-th stream derived from a master seed. Equals the
/// (index+1)-th output of a SplitMix64 generator seeded with `master`, so
/// distinct indices give statistically independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Seedable generator with a portable bounded-draw primitive. The engine is
/// std::mt19937_64, whose output sequence for a given seed is fixed by the
/// standard; uniform_below avoids std::uniform_int_distribution, whose
/// results vary between standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased draw from [0, n) via rejection of the low tail.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) {
            throw InvalidParamsError("uniform_below requires a nonempty range");
        }
        if (n == 1) {
            return 0;
        }
        const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < reject_below);
        return x % n;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

namespace detail {

/// Partial Fisher-Yates: returns `take` distinct values drawn uniformly
/// from {1, ..., n}, in draw order.
inline std::vector<int> sample_distinct(int n, int take, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pool[static_cast<std::size_t>(i)] = i + 1;
    }
    for (int i = 0; i < take; ++i) {
        const auto j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(take));
    return pool;
}

}  // namespace detail

}  // namespace projmotif
