#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicity {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
constexpr char side_letter(Side s) noexcept { return s == Side::A ? 'A' : 'B'; }

/// A cross edge, 1-based on both sides.
struct Edge {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A vertex named by its side and 1-based index within that side.
struct Vertex {
    Side side = Side::A;
    int index = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Simple bipartite graph G = (A ∪ B, E). Immutable once constructed.
 *
 * Both sides keep CSR adjacency with sorted neighbor lists, so degrees and
 * neighborhoods are O(1) to reach. Same-side edges cannot be expressed.
 *
 * Dense vertex ids (used by every representation type) put A first:
 * A-vertex i has id i-1 and B-vertex j has id a_count()+j-1.
 */
class BipartiteGraph {
  public:
    /// Throws GraphError on non-positive side sizes, out-of-range indices or
    /// duplicate edges. Edge order is irrelevant; edges are stored sorted.
    BipartiteGraph(int a_count, int b_count, std::vector<Edge> edges = {});

    int a_count() const noexcept { return a_count_; }
    int b_count() const noexcept { return b_count_; }
    int side_count(Side s) const noexcept { return s == Side::A ? a_count_ : b_count_; }
    int vertex_count() const noexcept { return a_count_ + b_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Sorted by (a, b).
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Indices (1-based, ascending) of the other-side neighbors of (side, index).
    std::span<const int> neighbors(Side side, int index) const;
    int degree(Side side, int index) const;
    bool has_edge(int a, int b) const;

    int vertex_id(Side side, int index) const noexcept {
        return side == Side::A ? index - 1 : a_count_ + index - 1;
    }
    int vertex_id(Vertex v) const noexcept { return vertex_id(v.side, v.index); }
    Vertex vertex_at(int id) const noexcept {
        return id < a_count_ ? Vertex{Side::A, id + 1} : Vertex{Side::B, id - a_count_ + 1};
    }

    /// Adjacency on dense ids; same-side pairs are never adjacent.
    bool adjacent(int u, int v) const;

    friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
        return x.a_count_ == y.a_count_ && x.b_count_ == y.b_count_ && x.edges_ == y.edges_;
    }

  private:
    struct Csr {
        std::vector<int> offsets;
        std::vector<int> targets;
    };

    const Csr& csr(Side s) const noexcept { return s == Side::A ? adj_a_ : adj_b_; }

    int a_count_;
    int b_count_;
    std::vector<Edge> edges_;
    Csr adj_a_;
    Csr adj_b_;
};

/// Max degrees per side and Δ' = min(Δ_A, Δ_B).
struct DegreeProfile {
    int delta_a = 0;
    int delta_b = 0;
    int delta_prime = 0;
    std::vector<int> degrees_a;  // degrees_a[i-1] = d(a_i)
    std::vector<int> degrees_b;

    int degree(Side side, int index) const {
        return side == Side::A ? degrees_a.at(index - 1) : degrees_b.at(index - 1);
    }
};

DegreeProfile degree_profile(const BipartiteGraph& g);

/// Mirror image: A and B exchanged, every edge (a, b) becomes (b, a).
BipartiteGraph swap_sides(const BipartiteGraph& g);

struct NormalizedGraph {
    BipartiteGraph graph;
    bool swapped = false;
};

/// Ensures a_count <= b_count, swapping sides when needed. Ties keep the
/// original orientation.
NormalizedGraph normalize_sides(const BipartiteGraph& g);

/// Number of cross pairs (a, b) that are not edges.
std::int64_t cross_non_edge_count(const BipartiteGraph& g) noexcept;

}  // namespace cubicity
