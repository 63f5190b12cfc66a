#pragma once

#include <cstdint>
#include <random>

namespace cubicity {

/// SplitMix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
    return mix64(parent ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/**
 * Seedable 64-bit generator with portable bounded draws.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. Bounded integers and unit doubles are produced here rather than
 * with <random> distributions, whose algorithms are implementation-defined,
 * so a seed yields the same permutations on every toolchain.
 */
class Rng {
  public:
    static constexpr const char* kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    /// Number of raw 64-bit words consumed so far.
    std::uint64_t position() const noexcept { return position_; }

    std::uint64_t next() {
        ++position_;
        return engine_();
    }

    /// Uniform on [0, bound); bound >= 1. Lemire's multiply-and-reject.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t seed_;
    std::uint64_t position_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace cubicity
