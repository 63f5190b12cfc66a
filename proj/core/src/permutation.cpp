#include "cubicity/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace cubicity {

Permutation::Permutation(Side side, std::vector<int> ranks) : side_(side), ranks_(std::move(ranks)) {
    std::vector<char> used(ranks_.size() + 1, 0);
    for (int r : ranks_) {
        if (r < 1 || r > size() || used[static_cast<std::size_t>(r)])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
        used[static_cast<std::size_t>(r)] = 1;
    }
}

Permutation Permutation::identity(Side side, int size) {
    std::vector<int> ranks(static_cast<std::size_t>(size));
    std::iota(ranks.begin(), ranks.end(), 1);
    return Permutation(side, std::move(ranks));
}

Permutation random_permutation(int size, Rng& rng, Side side) {
    if (size < 1) throw std::invalid_argument("permutation size must be positive");
    std::vector<int> ranks(static_cast<std::size_t>(size));
    std::iota(ranks.begin(), ranks.end(), 1);
    for (std::size_t i = ranks.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(ranks[i], ranks[j]);
    }
    return Permutation(side, std::move(ranks), Permutation::Trusted{});
}

std::map<int, int> project(const Permutation& pi, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("projection onto an empty set");
    std::vector<std::pair<int, int>> by_rank;  // (π(x), x)
    by_rank.reserve(subset.size());
    for (int x : subset) {
        if (x < 1 || x > pi.size())
            throw std::invalid_argument("element " + std::to_string(x) + " is not on side " +
                                        side_letter(pi.side()));
        by_rank.emplace_back(pi(x), x);
    }
    std::sort(by_rank.begin(), by_rank.end());
    std::map<int, int> out;
    for (std::size_t i = 0; i < by_rank.size(); ++i) {
        if (!out.emplace(by_rank[i].second, static_cast<int>(i) + 1).second)
            throw std::invalid_argument("repeated element in projection subset");
    }
    return out;
}

}  // namespace cubicity
