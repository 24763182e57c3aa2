#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atx/error.hpp"

namespace atx {

using VertexId = int;

// Graphs handled by the bitset-based algorithms.
inline constexpr int kMaxMaskVertices = 64;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices [0, n). Immutable once built.
// Edges are stored canonically (u < v) in lexicographic order; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    int n() const noexcept { return static_cast<int>(adj_.size()); }
    int m() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    bool adjacent(VertexId u, VertexId v) const;
    // Bit i set iff i is a neighbor of v. Throws TooLarge unless n <= 64.
    std::uint64_t mask(VertexId v) const;
    std::uint64_t all_vertices_mask() const;
    bool has_masks() const noexcept { return !masks_.empty() || adj_.empty(); }

    // Position of edge {u,v} in edges(), if present.
    std::optional<int> edge_index(VertexId u, VertexId v) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && n() == other.n(); }

private:
    friend Graph make_graph(int n, std::span<const Edge> edges);

    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> masks_;
};

// Throws InvalidEdge for loops or out-of-range endpoints and DuplicateEdge for repeated pairs.
Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Induced subgraph with dense re-indexing.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent;  // new id -> parent id
    std::vector<int> from_parent;     // parent id -> new id, or -1 when removed
};

Subgraph delete_vertices(const Graph& g, std::span<const VertexId> removed);
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept);

struct ChainOfDiamonds {
    Graph graph;
    std::vector<VertexId> hubs;  // u_0, ..., u_n
};

// Vertex layout: u_0 = 0 and, for diamond i >= 1, v_i = 3i-2, w_i = 3i-1, u_i = 3i.
ChainOfDiamonds chain_of_diamonds(int diamonds);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Smallest d such that every subgraph has a vertex of degree <= d.
int degeneracy(const Graph& g);

// Handy generators used by tests, the CLI and the corpus.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph subdivide_all_edges(const Graph& g, int times = 1);

// Undirected multigraph with loops and parallel edges, as produced by suppressing
// chains of 2-vertices. Each edge instance remembers the source path it replaces.
struct EdgeInstance {
    VertexId u = 0;  // multigraph ids, u <= v
    VertexId v = 0;
    // Ordered source-graph path from source(u) to source(v); empty for an original edge.
    // For a loop the path is a closed walk starting and ending at source(u).
    std::vector<VertexId> path;
    bool is_loop() const noexcept { return u == v; }
};

struct MultiGraph {
    int n = 0;
    std::vector<EdgeInstance> instances;
    std::vector<VertexId> source;  // multigraph vertex -> source-graph vertex

    int degree(VertexId v) const;  // loops count twice
};

// Suppresses every maximal path whose interior vertices are 2-vertices outside `keep`.
// Throws UnanchoredComponent if some component consists solely of such vertices.
MultiGraph contract_two_chains(const Graph& g, std::span<const VertexId> keep);

} // namespace atx
