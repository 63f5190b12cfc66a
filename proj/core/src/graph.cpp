#include "cubicity/graph.hpp"

#include <algorithm>
#include <utility>

namespace cubicity {

std::string to_string(Vertex v) {
    return std::string(1, side_letter(v.side)) + std::to_string(v.index);
}

namespace {

template <typename Key>
void fill_csr(std::vector<int>& offsets, std::vector<int>& targets, int count,
              const std::vector<Edge>& edges, Key key) {
    // counts land in offsets[index] (1-based), so the prefix sum leaves
    // offsets[index-1] at the start of that vertex's run
    offsets.assign(static_cast<std::size_t>(count) + 1, 0);
    for (const Edge& e : edges) ++offsets[static_cast<std::size_t>(key(e).first)];
    for (int i = 0; i < count; ++i) offsets[i + 1] += offsets[i];
    targets.resize(edges.size());
    std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
        auto [from, to] = key(e);
        targets[static_cast<std::size_t>(cursor[from - 1]++)] = to;
    }
    for (int i = 0; i < count; ++i)
        std::sort(targets.begin() + offsets[i], targets.begin() + offsets[i + 1]);
}

}  // namespace

BipartiteGraph::BipartiteGraph(int a_count, int b_count, std::vector<Edge> edges)
    : a_count_(a_count), b_count_(b_count), edges_(std::move(edges)) {
    if (a_count_ < 1 || b_count_ < 1)
        throw GraphError("both sides need at least one vertex");
    for (const Edge& e : edges_) {
        if (e.a < 1 || e.a > a_count_ || e.b < 1 || e.b > b_count_)
            throw GraphError("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                             ") out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->a) + ", " +
                         std::to_string(dup->b) + ")");

    fill_csr(adj_a_.offsets, adj_a_.targets, a_count_, edges_,
             [](const Edge& e) { return std::pair{e.a, e.b}; });
    fill_csr(adj_b_.offsets, adj_b_.targets, b_count_, edges_,
             [](const Edge& e) { return std::pair{e.b, e.a}; });
}

std::span<const int> BipartiteGraph::neighbors(Side side, int index) const {
    const Csr& c = csr(side);
    if (index < 1 || index > side_count(side))
        throw GraphError("vertex index out of range");
    return std::span<const int>(c.targets).subspan(
        static_cast<std::size_t>(c.offsets[index - 1]),
        static_cast<std::size_t>(c.offsets[index] - c.offsets[index - 1]));
}

int BipartiteGraph::degree(Side side, int index) const {
    return static_cast<int>(neighbors(side, index).size());
}

bool BipartiteGraph::has_edge(int a, int b) const {
    auto nb = neighbors(Side::A, a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

bool BipartiteGraph::adjacent(int u, int v) const {
    Vertex x = vertex_at(u);
    Vertex y = vertex_at(v);
    if (x.side == y.side) return false;
    return x.side == Side::A ? has_edge(x.index, y.index) : has_edge(y.index, x.index);
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
    DegreeProfile p;
    p.degrees_a.resize(static_cast<std::size_t>(g.a_count()));
    p.degrees_b.resize(static_cast<std::size_t>(g.b_count()));
    for (int i = 1; i <= g.a_count(); ++i) p.degrees_a[i - 1] = g.degree(Side::A, i);
    for (int j = 1; j <= g.b_count(); ++j) p.degrees_b[j - 1] = g.degree(Side::B, j);
    p.delta_a = *std::max_element(p.degrees_a.begin(), p.degrees_a.end());
    p.delta_b = *std::max_element(p.degrees_b.begin(), p.degrees_b.end());
    p.delta_prime = std::min(p.delta_a, p.delta_b);
    return p;
}

BipartiteGraph swap_sides(const BipartiteGraph& g) {
    std::vector<Edge> mirrored;
    mirrored.reserve(g.edges().size());
    for (const Edge& e : g.edges()) mirrored.push_back({e.b, e.a});
    return BipartiteGraph(g.b_count(), g.a_count(), std::move(mirrored));
}

NormalizedGraph normalize_sides(const BipartiteGraph& g) {
    if (g.a_count() <= g.b_count()) return {g, false};
    return {swap_sides(g), true};
}

std::int64_t cross_non_edge_count(const BipartiteGraph& g) noexcept {
    return static_cast<std::int64_t>(g.a_count()) * g.b_count() - g.edge_count();
}

}  // namespace cubicity
