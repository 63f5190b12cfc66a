#pragma once

#include <vector>

#include "cubicity/graph.hpp"
#include "cubicity/interval_rep.hpp"
#include "cubicity/vertex_graph.hpp"

namespace cubicity {

/// Bits needed to give `side_size` vertices distinct codes: ⌈log2 n⌉ for
/// n >= 2, and 0 for a single vertex.
int bit_count_for(int side_size) noexcept;

/**
 * Deterministic family that separates every same-side pair on `side`
 * (H1 for A, H2 for B).
 *
 * Rep i (1-based) places side-vertex j at 0 or 2 according to bit i-1 of
 * the 0-based code j-1, and every vertex of the other side at 1, with
 * threshold 1. Cross pairs are at distance 1 in every rep, so the family
 * never removes a cross pair; two distinct side vertices differ in some
 * bit, so they sit at distance 2 in that rep.
 */
struct BitEncodingFamily {
    Side side = Side::A;
    int a_count = 0;
    int b_count = 0;
    std::vector<UnitIntervalRep> reps;

    int bit_count() const noexcept { return static_cast<int>(reps.size()); }
    int vertex_count() const noexcept { return a_count + b_count; }

    /// The reps tagged h1-bit-i (side A) or h2-bit-i (side B).
    std::vector<Dimension> dimensions() const;
};

BitEncodingFamily build_h_family(int a_count, int b_count, Side side);

inline BitEncodingFamily build_h_family(const BipartiteGraph& g, Side side) {
    return build_h_family(g.a_count(), g.b_count(), side);
}

/// Intersection of the family's induced graphs; complete graph when empty.
VertexGraph intersection_of_family(const BitEncodingFamily& family);

}  // namespace cubicity
