#include <algorithm>
#include <numeric>

#include "cubicity/generator.hpp"
#include "cubicity/randunit.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cubicity;

TEST_CASE("build_u on a single edge") {
    BipartiteGraph g(1, 1, {{1, 1}});
    UnitIntervalRep rep = build_u(Permutation::identity(Side::A, 1), g);
    CHECK(rep.threshold == 2);
    CHECK(rep.placement == std::vector<std::int64_t>{1, 3});
    CHECK(rep.adjacent(0, 1));
}

TEST_CASE("build_u hand-evaluated non-edge, both orders") {
    // A = {a1, a2}, B = {b1}, E = {(a1, b1)}, n = 3
    BipartiteGraph g(2, 1, {{1, 1}});
    const int a2 = g.vertex_id(Side::A, 2);
    const int b1 = g.vertex_id(Side::B, 1);

    UnitIntervalRep keep = build_u(Permutation(Side::A, {1, 2}), g);
    CHECK(keep.placement[b1] == 4);
    CHECK(keep.adjacent(a2, b1));  // |4 - 2| = 2 <= 3

    UnitIntervalRep kill = build_u(Permutation(Side::A, {2, 1}), g);
    CHECK(kill.placement[b1] == 5);
    CHECK_FALSE(kill.adjacent(a2, b1));  // |5 - 1| = 4 > 3
}

TEST_CASE("isolated vertices on the unpermuted side sit at 2n + 2") {
    BipartiteGraph g(2, 3, {{1, 1}});
    UnitIntervalRep rep = build_u(Permutation::identity(Side::A, 2), g);
    const std::int64_t n = 5;
    CHECK(rep.placement[g.vertex_id(Side::B, 2)] == 2 * n + 2);
    CHECK(rep.placement[g.vertex_id(Side::B, 3)] == 2 * n + 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 2; b <= 3; ++b)
            CHECK_FALSE(rep.adjacent(g.vertex_id(Side::A, a), g.vertex_id(Side::B, b)));
}

TEST_CASE("build_u rejects a permutation of the wrong size") {
    BipartiteGraph g(2, 3);
    CHECK_THROWS_AS(build_u(Permutation::identity(Side::A, 3), g), std::invalid_argument);
}

TEST_CASE("randunit branch selection") {
    SUBCASE("star centered in A permutes A") {
        BipartiteGraph g(1, 3, {{1, 1}, {1, 2}, {1, 3}});
        CHECK(randunit_side(g) == Side::A);
        Rng rng(1);
        CHECK(randunit(g, rng).provenance.permuted == Side::A);
    }
    SUBCASE("star centered in B permutes B") {
        BipartiteGraph g(3, 1, {{1, 1}, {2, 1}, {3, 1}});
        CHECK(randunit_side(g) == Side::B);
        Rng rng(1);
        Dimension d = randunit(g, rng);
        CHECK(d.provenance.permuted == Side::B);
        // B is permuted, so B sits at its rank and A at n + min rank
        CHECK(d.rep.placement[g.vertex_id(Side::B, 1)] == 1);
        CHECK(d.rep.placement[g.vertex_id(Side::A, 2)] == 5);
    }
    SUBCASE("tie permutes A") {
        CHECK(randunit_side(BipartiteGraph(2, 2, {{1, 1}, {2, 2}})) == Side::A);
        CHECK(randunit_side(BipartiteGraph(2, 2)) == Side::A);
    }
}

TEST_CASE("every permutation yields a supergraph, exhaustively for n1 <= 4, n2 <= 3") {
    long long checked = 0;
    for (int n1 = 1; n1 <= 4; ++n1) {
        for (int n2 = 1; n2 <= 3; ++n2) {
            for (std::uint64_t mask = 0; mask < (1ULL << (n1 * n2)); ++mask) {
                BipartiteGraph g = testing::graph_from_mask(n1, n2, mask);
                for (Side side : {Side::A, Side::B}) {
                    std::vector<int> ranks(static_cast<std::size_t>(g.side_count(side)));
                    std::iota(ranks.begin(), ranks.end(), 1);
                    do {
                        UnitIntervalRep rep = build_u(Permutation(side, ranks), g);
                        for (const Edge& e : g.edges()) {
                            const bool kept = rep.adjacent(g.vertex_id(Side::A, e.a), g.vertex_id(Side::B, e.b));
                            if (!kept) FAIL("edge lost");
                        }
                        ++checked;
                    } while (std::next_permutation(ranks.begin(), ranks.end()));
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("randunit output contains every edge on 100 random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n1 = 1 + static_cast<int>(seed % 12);
        const int n2 = 1 + static_cast<int>((seed * 5 + 3) % 17);
        BipartiteGraph g = gen_random_bipartite(n1, n2, 0.1 + 0.2 * static_cast<double>(seed % 4), seed);
        Rng rng(seed ^ 0xabcdef);
        Dimension d = randunit(g, rng);
        for (const Edge& e : g.edges())
            CHECK(d.rep.adjacent(g.vertex_id(Side::A, e.a), g.vertex_id(Side::B, e.b)));
    }
}

TEST_CASE("a cross non-edge survives iff its permuted endpoint is not the minimum") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        BipartiteGraph g = gen_random_bipartite(6, 8, 0.35, seed);
        for (Side side : {Side::A, Side::B}) {
            Rng rng(seed);
            const Permutation pi = random_permutation(g.side_count(side), rng, side);
            const UnitIntervalRep rep = build_u(pi, g);
            const Side other_side = other(side);
            for (int a = 1; a <= g.a_count(); ++a) {
                for (int b = 1; b <= g.b_count(); ++b) {
                    if (g.has_edge(a, b)) continue;
                    const int s = side == Side::A ? a : b;   // permuted endpoint
                    const int w = side == Side::A ? b : a;   // other endpoint
                    auto nb = g.neighbors(other_side, w);
                    const bool adjacent = rep.adjacent(g.vertex_id(Side::A, a), g.vertex_id(Side::B, b));
                    if (nb.empty()) {
                        CHECK_FALSE(adjacent);
                        continue;
                    }
                    int lowest = g.side_count(side) + 1;
                    for (int x : nb) lowest = std::min(lowest, pi(x));
                    CHECK(adjacent == (pi(s) > lowest));

                    // the same event through the projection onto {s} ∪ N(w)
                    std::vector<int> subset(nb.begin(), nb.end());
                    subset.push_back(s);
                    CHECK((pi(s) < lowest) == (project(pi, subset).at(s) == 1));
                }
            }
        }
    }
}

TEST_CASE("randunit is deterministic in its rng") {
    BipartiteGraph g = gen_random_bipartite(10, 15, 0.3, 5);
    Rng x(17), y(17);
    CHECK(randunit(g, x) == randunit(g, y));
}
