#pragma once

#include <cstdint>

namespace pzf {

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Child seed for stream `index` under `master`. Pure function.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/**
 * Counter-based uniform source. The draw for a (key, time) pair depends
 * only on (seed, key, time), so two processes holding the same stream see
 * identical randomness for the same directed edge at the same step, no
 * matter in which order or how often they ask.
 */
class UniformStream
{
public:
    explicit UniformStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform(std::uint64_t key, std::uint64_t time) const;

    std::uint64_t bits(std::uint64_t key, std::uint64_t time) const;

    /// Independent stream tagged by `salt`.
    UniformStream derive(std::uint64_t salt) const { return UniformStream(derive_seed(seed_, salt)); }

private:
    std::uint64_t seed_;
};

} // namespace pzf
