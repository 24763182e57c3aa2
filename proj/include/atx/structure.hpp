#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "atx/coloring.hpp"
#include "atx/graph.hpp"

namespace atx {

bool is_k4_minor_free(const Graph& g);
bool is_triangle_free(const Graph& g);

struct DiamondLink {
    VertexId a, b;  // a < b
    VertexId p, q;  // smallest adjacent pair of common neighbours, p < q
};
struct DiamondLinkGraph {
    std::vector<DiamondLink> links;  // sorted by (a, b)
    std::vector<std::pair<VertexId, VertexId>> pairs() const;
};
DiamondLinkGraph diamond_link_graph(const Graph& g);

// X is covered by the hub image of a homomorphism from some chain of diamonds.
// For |X| >= 2: X lies in one component of the link relation. For X = {a}: a lies on
// a triangle (two consecutive hubs may share an image).
bool is_chain_connected(const Graph& g, const std::vector<VertexId>& x);
bool is_chain_connected(const Graph& g, const DiamondLinkGraph& links, const std::vector<VertexId>& x);

// Proper 3-colorings up to renaming, plus, for each unordered triple, which values of
// |phi(X)| occur (bit k-1 set when some coloring uses k colors on X). Built eagerly.
class ColoringProfile {
public:
    explicit ColoringProfile(const Graph& g);
    bool colorable() const noexcept { return !colorings_.empty(); }
    const std::vector<Coloring>& colorings() const noexcept { return colorings_; }
    std::uint8_t triple_mask(VertexId x, VertexId y, VertexId z) const;

private:
    int n_;
    std::vector<Coloring> colorings_;
    std::vector<std::uint8_t> masks_;
};

// Bit k-1 is set when some proper 3-coloring uses exactly k colors on {x,y,z}.
// Direct precolored search, no full enumeration.
std::uint8_t triple_color_sizes(const Graph& g, VertexId x, VertexId y, VertexId z);

bool is_feasible_triple(const Graph& g, VertexId x, VertexId y, VertexId z);
bool is_feasible_triple(const Graph& g, const DiamondLinkGraph& links, const ColoringProfile& profile, VertexId x,
                        VertexId y, VertexId z);
// Throws NoColoring if g is not 3-colorable.
bool is_blocked_triple(const Graph& g, VertexId x, VertexId y, VertexId z);
bool is_blocked_triple(const ColoringProfile& profile, VertexId x, VertexId y, VertexId z);

// Evaluates "some coloring has |phi(X)| = 2  implies  X feasible". Requires g K4-minor-free.
bool feasible_from_coloring(const Graph& g, const std::vector<VertexId>& x);
// {x,y,z} or {x2,y,z} is feasible. Requires xx2 an edge, y,z outside {x,x2}, g K4-minor-free.
bool edge_feasibility_dichotomy(const Graph& g, VertexId x, VertexId x2, VertexId y, VertexId z);

// Requires g connected, K4-minor-free, min degree 2, not a cycle; else InvalidInput.
std::vector<VertexId> genuine_2_vertices(const Graph& g);
bool two_nonadjacent_2vertices(const Graph& g);
// Genuine-ness of a single 2-vertex, without the global preconditions.
bool is_genuine_2_vertex(const Graph& g, VertexId v);

struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks;           // edge sets (bridges are single edges)
    std::vector<std::vector<VertexId>> block_vertices;
    std::vector<VertexId> cut_vertices;
};
BlockDecomposition block_decomposition(const Graph& g);
bool is_gallai_tree(const Graph& g);

} // namespace atx
