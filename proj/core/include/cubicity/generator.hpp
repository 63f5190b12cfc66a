#pragma once

#include <cstdint>

#include "cubicity/graph.hpp"

namespace cubicity {

/// Random bipartite graph: each of the n1*n2 cross pairs is an edge
/// independently with probability p. Deterministic in `seed`.
/// Throws std::invalid_argument if p is outside [0, 1] or a side is empty.
BipartiteGraph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed);

}  // namespace cubicity
