#include "cubicity/randunit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cubicity {

UnitIntervalRep build_u(const Permutation& pi, const BipartiteGraph& g) {
    const Side s = pi.side();
    const Side t = other(s);
    if (pi.size() != g.side_count(s))
        throw std::invalid_argument("permutation size does not match its side");

    const std::int64_t n = g.vertex_count();
    UnitIntervalRep rep;
    rep.threshold = n;
    rep.placement.reserve(static_cast<std::size_t>(n));

    // Filled in dense-id order (all of A, then all of B) in a single pass.
    const auto ranks = pi.ranks();
    auto place_side = [&](Side side) {
        const int count = g.side_count(side);
        if (side == s) {
            rep.placement.insert(rep.placement.end(), ranks.begin(), ranks.end());
            return;
        }
        for (int v = 1; v <= count; ++v) {
            int lowest = std::numeric_limits<int>::max();
            for (int x : g.neighbors(t, v)) lowest = std::min(lowest, ranks[static_cast<std::size_t>(x - 1)]);
            rep.placement.push_back(lowest == std::numeric_limits<int>::max() ? 2 * n + 2 : n + lowest);
        }
    };
    place_side(Side::A);
    place_side(Side::B);
    return rep;
}

Side randunit_side(const BipartiteGraph& g) {
    int delta_a = 0;
    int delta_b = 0;
    for (int i = 1; i <= g.a_count(); ++i) delta_a = std::max(delta_a, g.degree(Side::A, i));
    for (int j = 1; j <= g.b_count(); ++j) delta_b = std::max(delta_b, g.degree(Side::B, j));
    return delta_b <= delta_a ? Side::A : Side::B;
}

Dimension randunit(const BipartiteGraph& g, Rng& rng) {
    return randunit(g, randunit_side(g), rng);
}

Dimension randunit(const BipartiteGraph& g, Side permuted, Rng& rng) {
    Permutation pi = random_permutation(g.side_count(permuted), rng, permuted);
    return {build_u(pi, g), Provenance{DimKind::RandUnit, permuted, 0}};
}

}  // namespace cubicity
