#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cubicity/graph.hpp"

namespace cubicity {

/// General simple graph on dense ids 0..n-1, stored as bit rows. Unlike
/// BipartiteGraph it can hold same-side pairs, which is what an induced
/// unit interval graph produces.
class VertexGraph {
  public:
    explicit VertexGraph(int vertex_count = 0);

    static VertexGraph complete(int vertex_count);
    static VertexGraph from_bipartite(const BipartiteGraph& g);

    int vertex_count() const noexcept { return n_; }
    bool has_edge(int u, int v) const noexcept {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::int64_t edge_count() const noexcept;
    /// All pairs (u, v), u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// In-place edge-set intersection; vertex counts must match.
    VertexGraph& intersect_with(const VertexGraph& other);

    friend bool operator==(const VertexGraph&, const VertexGraph&) = default;

  private:
    std::span<const std::uint64_t> row(int u) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
    }
    std::span<std::uint64_t> row(int u) noexcept {
        return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
    }

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Edge-set intersection of graphs on a common vertex set.
/// Throws std::invalid_argument on an empty list or a vertex-count mismatch.
VertexGraph intersect_graphs(std::span<const VertexGraph> graphs);

}  // namespace cubicity
