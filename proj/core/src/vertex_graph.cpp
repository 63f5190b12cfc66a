#include "cubicity/vertex_graph.hpp"

#include <bit>
#include <stdexcept>

namespace cubicity {

VertexGraph::VertexGraph(int vertex_count)
    : n_(vertex_count),
      words_((static_cast<std::size_t>(vertex_count) + 63) / 64),
      bits_(static_cast<std::size_t>(vertex_count) * words_, 0) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

VertexGraph VertexGraph::complete(int vertex_count) {
    VertexGraph g(vertex_count);
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
    return g;
}

VertexGraph VertexGraph::from_bipartite(const BipartiteGraph& g) {
    VertexGraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(g.vertex_id(Side::A, e.a), g.vertex_id(Side::B, e.b));
    return out;
}

void VertexGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    row(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    row(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

void VertexGraph::remove_edge(int u, int v) {
    row(u)[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    row(v)[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

std::int64_t VertexGraph::edge_count() const noexcept {
    std::int64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

std::vector<std::pair<int, int>> VertexGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

VertexGraph& VertexGraph::intersect_with(const VertexGraph& other) {
    if (other.n_ != n_) throw std::invalid_argument("vertex set mismatch in intersection");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
}

VertexGraph intersect_graphs(std::span<const VertexGraph> graphs) {
    if (graphs.empty()) throw std::invalid_argument("intersection of an empty list");
    VertexGraph out = graphs.front();
    for (const VertexGraph& g : graphs.subspan(1)) out.intersect_with(g);
    return out;
}

}  // namespace cubicity
