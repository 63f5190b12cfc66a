#pragma once

#include <cstdint>

#include "cubicity/graph.hpp"
#include "cubicity/interval_rep.hpp"
#include "cubicity/permutation.hpp"
#include "cubicity/rng.hpp"

namespace cubicity {

/**
 * The unit interval supergraph U(π, S, T, G) for a permutation π of side S.
 *
 * With n = n1 + n2 and threshold n:
 *   - v in S is placed at π(v);
 *   - v in T with neighbors is placed at n + min over x in N(v) of π(x);
 *   - v in T without neighbors is placed at 2n + 2, out of reach of all of S.
 *
 * For any π every edge of g survives, and a cross non-edge (s, t) survives
 * exactly when π(s) > min over N(t) of π.
 */
UnitIntervalRep build_u(const Permutation& pi, const BipartiteGraph& g);

/// Side RANDUNIT permutes: A when Δ_B <= Δ_A (ties go to A), else B.
Side randunit_side(const BipartiteGraph& g);

/// Permutes randunit_side(g) uniformly at random and returns build_u of it.
Dimension randunit(const BipartiteGraph& g, Rng& rng);

/// As above with the side already decided; lets callers hoist the degree scan.
Dimension randunit(const BipartiteGraph& g, Side permuted, Rng& rng);

}  // namespace cubicity
