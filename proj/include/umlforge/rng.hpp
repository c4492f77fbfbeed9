// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_RNG_HPP
#define UMLFORGE_RNG_HPP

#include <cstdint>

namespace umlforge {

/// SplitMix64 generator. Standard-library engines are portable but their
/// distributions are not; every draw here is fully specified so that a given
/// (seed, index) pair produces identical diagrams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n); n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform draw in [lo, hi] inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

/// Mixes a seed and a stream index into an independent generator state.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0x632BE59BD9B4E019ULL * (index + 1)));
    mixer.next();
    return mixer.next();
}

}  // namespace umlforge

#endif
