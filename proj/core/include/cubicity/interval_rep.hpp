#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubicity/graph.hpp"
#include "cubicity/rational.hpp"
#include "cubicity/vertex_graph.hpp"

namespace cubicity {

/**
 * One unit interval graph on A ∪ B, given by an integer placement per dense
 * vertex id and a positive threshold: u ~ v iff |placement[u] - placement[v]|
 * <= threshold. Equality at the threshold counts as adjacent (closed
 * intervals). Integer placements keep every adjacency test exact.
 */
struct UnitIntervalRep {
    std::vector<std::int64_t> placement;
    std::int64_t threshold = 1;

    bool adjacent(int u, int v) const noexcept {
        const std::int64_t d = placement[static_cast<std::size_t>(u)] -
                               placement[static_cast<std::size_t>(v)];
        return (d < 0 ? -d : d) <= threshold;
    }

    friend bool operator==(const UnitIntervalRep&, const UnitIntervalRep&) = default;
};

/// Throws std::invalid_argument if the placement does not cover exactly
/// `vertex_count` vertices or the threshold is not positive.
VertexGraph induced_graph(const UnitIntervalRep& rep, int vertex_count);

enum class DimKind : std::uint8_t { RandUnit, H1Bit, H2Bit };

/// Where a dimension came from. Informational only.
struct Provenance {
    DimKind kind = DimKind::RandUnit;
    Side permuted = Side::A;  // RandUnit only
    int bit = 0;              // H1Bit / H2Bit only, 1-based

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// "randunit:A", "randunit:B", "h1-bit-3", "h2-bit-1".
std::string to_string(const Provenance& p);
Provenance parse_provenance(std::string_view text);

struct Dimension {
    UnitIntervalRep rep;
    Provenance provenance;

    friend bool operator==(const Dimension&, const Dimension&) = default;
};

/// G = I_1 ∩ ... ∩ I_k over the dense vertex ids of an (a_count, b_count)
/// bipartite vertex set.
struct CubeRepresentation {
    int a_count = 0;
    int b_count = 0;
    std::vector<Dimension> dims;

    int dimension() const noexcept { return static_cast<int>(dims.size()); }
    int vertex_count() const noexcept { return a_count + b_count; }

    /// Adjacent in every dimension (vacuously true for k = 0).
    bool adjacent(int u, int v) const noexcept;

    friend bool operator==(const CubeRepresentation&, const CubeRepresentation&) = default;
};

/// Intersection of the induced graphs of all dims; complete graph when k = 0.
VertexGraph intersection_graph(const CubeRepresentation& rep);

/// Relabels a representation built for swap_sides(g) back onto g.
CubeRepresentation swap_sides(const CubeRepresentation& rep);

struct Interval {
    Rational lo;
    Rational hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals intersect iff neither lies strictly beyond the other.
inline bool intersects(const Interval& x, const Interval& y) noexcept {
    return !(x.hi < y.lo || y.hi < x.lo);
}

/// cubes[v][i] is the side-1 interval of vertex v in dimension i:
/// [placement_i(v) / c_i, placement_i(v) / c_i + 1].
using UnitCubes = std::vector<std::vector<Interval>>;

UnitCubes to_unit_cubes(const CubeRepresentation& rep);

/// Two k-cubes meet iff their intervals meet in every coordinate.
bool cubes_intersect(const std::vector<Interval>& x, const std::vector<Interval>& y);

}  // namespace cubicity
