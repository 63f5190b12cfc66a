#include <algorithm>
#include <map>
#include <numeric>

#include "cubicity/permutation.hpp"
#include "doctest.h"

using namespace cubicity;

TEST_CASE("bijection is enforced") {
    CHECK_THROWS_AS(Permutation(Side::A, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(Side::A, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(Side::A, {1, 3}), std::invalid_argument);
    CHECK_NOTHROW(Permutation(Side::B, {2, 3, 1}));
}

TEST_CASE("size 1 is always the identity") {
    Rng rng(3);
    for (int i = 0; i < 10; ++i) CHECK(random_permutation(1, rng) == Permutation::identity(Side::A, 1));
}

TEST_CASE("same seed gives the same permutation") {
    Rng x(99), y(99);
    CHECK(random_permutation(12, x, Side::B) == random_permutation(12, y, Side::B));
}

TEST_CASE("uniform over the 6 permutations of size 3") {
    Rng rng(123);
    std::map<std::vector<int>, int> counts;
    const int samples = 6000;
    for (int i = 0; i < samples; ++i) {
        auto p = random_permutation(3, rng);
        ++counts[std::vector<int>(p.ranks().begin(), p.ranks().end())];
    }
    REQUIRE(counts.size() == 6);
    double chi2 = 0.0;
    for (const auto& [perm, c] : counts) {
        CHECK(std::abs(c / double(samples) - 1.0 / 6.0) <= 0.03);
        chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
    }
    CHECK(chi2 < 20.52);  // chi-square, 5 dof, p = 0.001
}

TEST_CASE("Fisher-Yates is uniform over all 24 permutations of size 4") {
    Rng rng(77);
    std::map<std::vector<int>, int> counts;
    const int samples = 48000;
    for (int i = 0; i < samples; ++i) {
        auto p = random_permutation(4, rng);
        ++counts[std::vector<int>(p.ranks().begin(), p.ranks().end())];
    }
    REQUIRE(counts.size() == 24);
    double chi2 = 0.0;
    for (const auto& [perm, c] : counts) chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
    CHECK(chi2 < 49.73);  // chi-square, 23 dof, p = 0.001
}

TEST_CASE("project examples") {
    const auto id = Permutation::identity(Side::A, 5);
    CHECK(project(id, std::vector{2, 4, 5}) == std::map<int, int>{{2, 1}, {4, 2}, {5, 3}});

    const Permutation pi(Side::A, {3, 1, 2});
    CHECK(project(pi, std::vector{1, 3}) == std::map<int, int>{{3, 1}, {1, 2}});

    // whole side: π_X = π
    const Permutation q(Side::B, {4, 2, 5, 1, 3});
    auto full = project(q, std::vector{1, 2, 3, 4, 5});
    for (int v = 1; v <= 5; ++v) CHECK(full.at(v) == q(v));
}

TEST_CASE("project errors") {
    const auto id = Permutation::identity(Side::A, 3);
    CHECK_THROWS_AS(project(id, std::vector{4}), std::invalid_argument);
    CHECK_THROWS_AS(project(id, std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(project(id, std::vector{1, 1}), std::invalid_argument);
}

TEST_CASE("projection is order-isomorphic with image 1..|X|, exhaustively for size 5") {
    std::vector<int> ranks{1, 2, 3, 4, 5};
    do {
        const Permutation pi(Side::A, ranks);
        for (unsigned mask = 1; mask < 32; ++mask) {
            std::vector<int> subset;
            for (int v = 1; v <= 5; ++v)
                if (mask & (1U << (v - 1))) subset.push_back(v);
            auto proj = project(pi, subset);
            std::vector<int> image;
            for (auto [x, r] : proj) image.push_back(r);
            std::sort(image.begin(), image.end());
            std::vector<int> expect(subset.size());
            std::iota(expect.begin(), expect.end(), 1);
            CHECK(image == expect);
            for (int u : subset)
                for (int v : subset) CHECK((pi(u) < pi(v)) == (proj[u] < proj[v]));
        }
    } while (std::next_permutation(ranks.begin(), ranks.end()));
}
