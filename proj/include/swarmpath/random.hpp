#pragma once

#include <array>
#include <cstdint>

namespace swarmpath {

/// Seeded uniform source for the swarm updates.
///
/// The generator is xoshiro256** (Blackman & Vigna, 2018) with its 256-bit
/// state expanded from the 64-bit seed by SplitMix64. Uniform doubles take the
/// top 53 bits of each output, so every draw lies on [0, 1) and the sequence
/// is identical on every platform. Changing any of this breaks recorded
/// results; don't.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    /// Raw 64-bit output. Does not count as a uniform draw.
    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1).
    double uniform() noexcept;

    /// Number of uniform() calls since construction.
    std::uint64_t draws() const noexcept { return draws_; }

    /// Hands the current stream to the returned generator and jumps this one
    /// 2^128 outputs ahead, so the two never overlap in practice.
    RandomSource split() noexcept;

    friend bool operator==(const RandomSource&, const RandomSource&) = default;

private:
    void jump() noexcept;

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t draws_ = 0;
};

}  // namespace swarmpath
