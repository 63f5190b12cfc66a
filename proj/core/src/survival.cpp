#include "cubicity/survival.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cubicity/randunit.hpp"

namespace cubicity {

namespace {

void require_non_edge(const BipartiteGraph& g, Edge pair) {
    if (pair.a < 1 || pair.a > g.a_count() || pair.b < 1 || pair.b > g.b_count())
        throw std::invalid_argument("pair out of range");
    if (g.has_edge(pair.a, pair.b))
        throw std::invalid_argument("(" + std::to_string(pair.a) + ", " + std::to_string(pair.b) +
                                    ") is an edge, not a non-edge");
}

Rational closed_form(const BipartiteGraph& g, Edge pair, Side permuted) {
    const int d = permuted == Side::A ? g.degree(Side::B, pair.b) : g.degree(Side::A, pair.a);
    return Rational(d, d + 1);
}

}  // namespace

Rational nonedge_survival_exact(const BipartiteGraph& g, Edge pair) {
    require_non_edge(g, pair);
    return closed_form(g, pair, randunit_side(g));
}

Rational nonedge_survival_exact(const BipartiteGraph& g, Edge pair, Side permuted) {
    require_non_edge(g, pair);
    if (permuted != randunit_side(g))
        throw std::invalid_argument(std::string("RANDUNIT permutes side ") +
                                    side_letter(randunit_side(g)) + " for this graph, not " +
                                    side_letter(permuted));
    return closed_form(g, pair, permuted);
}

Rational nonedge_survival_enumerated(const BipartiteGraph& g, Edge pair, Side permuted) {
    require_non_edge(g, pair);
    const int size = g.side_count(permuted);
    if (size > 9) throw std::invalid_argument("side too large to enumerate");

    const int u = g.vertex_id(Side::A, pair.a);
    const int v = g.vertex_id(Side::B, pair.b);
    std::vector<int> ranks(static_cast<std::size_t>(size));
    std::iota(ranks.begin(), ranks.end(), 1);
    std::int64_t kept = 0;
    std::int64_t total = 0;
    do {
        const UnitIntervalRep rep = build_u(Permutation(permuted, ranks), g);
        kept += rep.adjacent(u, v) ? 1 : 0;
        ++total;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return Rational(kept, total);
}

Rational survival_bound(const BipartiteGraph& g) {
    const int dp = degree_profile(g).delta_prime;
    return Rational(dp, dp + 1);
}

std::vector<SurvivalEstimate> survival_frequencies(const BipartiteGraph& g, std::int64_t trials,
                                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    const Side side = randunit_side(g);

    std::vector<SurvivalEstimate> out;
    std::vector<std::pair<int, int>> ids;
    for (int a = 1; a <= g.a_count(); ++a) {
        for (int b = 1; b <= g.b_count(); ++b) {
            if (g.has_edge(a, b)) continue;
            out.push_back({{a, b}, 0, trials, closed_form(g, {a, b}, side)});
            ids.emplace_back(g.vertex_id(Side::A, a), g.vertex_id(Side::B, b));
        }
    }
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const Dimension dim = randunit(g, side, rng);
        for (std::size_t i = 0; i < ids.size(); ++i)
            out[i].survived += dim.rep.adjacent(ids[i].first, ids[i].second) ? 1 : 0;
    }
    return out;
}

}  // namespace cubicity
