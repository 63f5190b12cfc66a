#pragma once

#include <cstdint>
#include <vector>

#include "cubicity/graph.hpp"
#include "cubicity/rational.hpp"

namespace cubicity {

// Probability that a cross non-edge (a, b) is still an edge after one
// RANDUNIT dimension. With S the permuted side and w the endpoint of the
// pair on the other side, the pair survives iff its S-endpoint is not the
// π-minimum of itself plus N(w), so the probability is d(w) / (d(w) + 1).

/// Closed form for the side RANDUNIT picks. Throws std::invalid_argument if
/// (a, b) is an edge.
Rational nonedge_survival_exact(const BipartiteGraph& g, Edge pair);

/// Same, with the permuted side stated. Throws std::invalid_argument if it
/// is not the side RANDUNIT would permute for g.
Rational nonedge_survival_exact(const BipartiteGraph& g, Edge pair, Side permuted);

/// Fraction of all permutations of `permuted` for which build_u keeps the
/// pair adjacent, counted exhaustively. Side size must be <= 9.
Rational nonedge_survival_enumerated(const BipartiteGraph& g, Edge pair, Side permuted);

/// Δ' / (Δ' + 1).
Rational survival_bound(const BipartiteGraph& g);

struct SurvivalEstimate {
    Edge pair;
    std::int64_t survived = 0;
    std::int64_t trials = 0;
    Rational closed_form;

    double frequency() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(survived) / static_cast<double>(trials);
    }
};

/// Monte Carlo: `trials` independent RANDUNIT draws (trial seeds derived from
/// `seed`), counting for every cross non-edge how often it survives.
/// Result is ordered by (a, b).
std::vector<SurvivalEstimate> survival_frequencies(const BipartiteGraph& g, std::int64_t trials,
                                                   std::uint64_t seed);

}  // namespace cubicity
