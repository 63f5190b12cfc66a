#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubicity/graph.hpp"
#include "cubicity/rng.hpp"

namespace cubicity {

/// A bijection π from one side's vertices {1..size} onto ranks {1..size}.
class Permutation {
  public:
    /// ranks[i-1] = π(i). Throws std::invalid_argument unless ranks is a
    /// permutation of 1..ranks.size().
    Permutation(Side side, std::vector<int> ranks);

    static Permutation identity(Side side, int size);

    Side side() const noexcept { return side_; }
    int size() const noexcept { return static_cast<int>(ranks_.size()); }
    int operator()(int index) const { return ranks_.at(static_cast<std::size_t>(index - 1)); }
    std::span<const int> ranks() const noexcept { return ranks_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    struct Trusted {};
    Permutation(Side side, std::vector<int> ranks, Trusted) : side_(side), ranks_(std::move(ranks)) {}
    friend Permutation random_permutation(int size, Rng& rng, Side side);

    Side side_;
    std::vector<int> ranks_;
};

/// Uniform over all size! permutations (Fisher-Yates).
Permutation random_permutation(int size, Rng& rng, Side side = Side::A);

/// π_X: relabels the elements of X by the order of their π values, 1..|X|.
/// Throws std::invalid_argument for an empty X, a repeated element, or an
/// element outside π's side.
std::map<int, int> project(const Permutation& pi, std::span<const int> subset);

}  // namespace cubicity
