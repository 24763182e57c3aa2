#include "atx/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace atx {

bool is_k4_minor_free(const Graph& g) {
    std::vector<std::set<VertexId>> adj(g.n());
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> alive(g.n(), true);
    int left = g.n();
    for (bool changed = true; changed && left > 0;) {
        changed = false;
        for (VertexId v = 0; v < g.n(); ++v) {
            if (!alive[v] || adj[v].size() > 2) continue;
            if (adj[v].size() == 2) {
                VertexId a = *adj[v].begin(), b = *adj[v].rbegin();
                adj[a].insert(b);  // parallel edges collapse
                adj[b].insert(a);
            }
            for (VertexId w : adj[v]) adj[w].erase(v);
            adj[v].clear();
            alive[v] = false;
            --left;
            changed = true;
        }
    }
    // Minimum degree >= 3 forces a K4 minor.
    return left == 0;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (VertexId w : g.neighbors(u))
            if (w != v && g.adjacent(v, w)) return false;
    return true;
}

std::vector<std::pair<VertexId, VertexId>> DiamondLinkGraph::pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& l : links) out.emplace_back(l.a, l.b);
    return out;
}

DiamondLinkGraph diamond_link_graph(const Graph& g) {
    DiamondLinkGraph out;
    for (VertexId a = 0; a < g.n(); ++a)
        for (VertexId b = a + 1; b < g.n(); ++b) {
            std::vector<VertexId> common;
            std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                                  g.neighbors(b).end(), std::back_inserter(common));
            bool found = false;
            for (std::size_t i = 0; i < common.size() && !found; ++i)
                for (std::size_t j = i + 1; j < common.size() && !found; ++j)
                    if (g.adjacent(common[i], common[j])) {
                        out.links.push_back({a, b, common[i], common[j]});
                        found = true;
                    }
        }
    return out;
}

namespace {

void check_vertex_set(const Graph& g, const std::vector<VertexId>& x) {
    if (x.empty()) fail(ErrorCode::InvalidInput, "vertex set must be nonempty");
    std::set<VertexId> s(x.begin(), x.end());
    if (s.size() != x.size()) fail(ErrorCode::DuplicateVertex, "vertex repeated");
    if (*s.begin() < 0 || *s.rbegin() >= g.n()) fail(ErrorCode::InvalidInput, "vertex out of range");
}

bool on_triangle(const Graph& g, VertexId a) {
    for (VertexId p : g.neighbors(a))
        for (VertexId q : g.neighbors(a))
            if (p < q && g.adjacent(p, q)) return true;
    return false;
}

} // namespace

bool is_chain_connected(const Graph& g, const DiamondLinkGraph& links, const std::vector<VertexId>& x) {
    check_vertex_set(g, x);
    if (x.size() == 1) return on_triangle(g, x[0]);
    std::vector<VertexId> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<VertexId(VertexId)> find = [&](VertexId v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& l : links.links) parent[find(l.a)] = find(l.b);
    for (VertexId v : x) {
        if (find(v) != find(x[0])) return false;
    }
    // Distinct vertices in one component are necessarily link-incident.
    return true;
}

bool is_chain_connected(const Graph& g, const std::vector<VertexId>& x) {
    return is_chain_connected(g, diamond_link_graph(g), x);
}

ColoringProfile::ColoringProfile(const Graph& g) : n_(g.n()), colorings_(canonical_colorings(g, 3)) {
    masks_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (const auto& c : colorings_)
        for (VertexId x = 0; x < n_; ++x)
            for (VertexId y = x + 1; y < n_; ++y) {
                const int two = 1 + (c[x] != c[y]);
                for (VertexId z = y + 1; z < n_; ++z) {
                    const int distinct = two + (c[z] != c[x] && c[z] != c[y]);
                    masks_[(static_cast<std::size_t>(x) * n_ + y) * n_ + z] |= static_cast<std::uint8_t>(1u << (distinct - 1));
                }
            }
}

std::uint8_t ColoringProfile::triple_mask(VertexId x, VertexId y, VertexId z) const {
    std::array<VertexId, 3> t{x, y, z};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) fail(ErrorCode::DuplicateVertex, "triple vertices must be distinct");
    if (t[0] < 0 || t[2] >= n_) fail(ErrorCode::InvalidInput, "vertex out of range");
    return masks_[(static_cast<std::size_t>(t[0]) * n_ + t[1]) * n_ + t[2]];
}

bool is_feasible_triple(const Graph& g, const DiamondLinkGraph& links, const ColoringProfile& profile, VertexId x,
                        VertexId y, VertexId z) {
    // Colorings with at most two colors on X.
    if ((profile.triple_mask(x, y, z) & 0b011) == 0) return false;
    return !is_chain_connected(g, links, {x, y, z});
}

namespace {

// Completes a partial 3-coloring (0 = uncolored), most constrained vertex first.
bool extend_coloring(const Graph& g, std::vector<int>& c) {
    VertexId best = -1;
    int best_options = 4;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (c[v]) continue;
        int used = 0;
        for (VertexId w : g.neighbors(v))
            if (c[w]) used |= 1 << c[w];
        int options = 3 - std::popcount(static_cast<unsigned>(used));
        if (options < best_options) {
            best_options = options;
            best = v;
            if (options == 0) return false;
        }
    }
    if (best < 0) return true;
    for (int col = 1; col <= 3; ++col) {
        bool ok = true;
        for (VertexId w : g.neighbors(best))
            if (c[w] == col) ok = false;
        if (!ok) continue;
        c[best] = col;
        if (extend_coloring(g, c)) return true;
    }
    c[best] = 0;
    return false;
}

bool precolored(const Graph& g, const std::array<VertexId, 3>& t, const std::array<int, 3>& cols) {
    std::vector<int> c(g.n(), 0);
    for (int i = 0; i < 3; ++i) c[t[i]] = cols[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (cols[i] == cols[j] && g.adjacent(t[i], t[j])) return false;
    return extend_coloring(g, c);
}

} // namespace

std::uint8_t triple_color_sizes(const Graph& g, VertexId x, VertexId y, VertexId z) {
    check_vertex_set(g, {x, y, z});
    const std::array<VertexId, 3> t{x, y, z};
    std::uint8_t mask = 0;
    if (precolored(g, t, {1, 1, 1})) mask |= 0b001;
    if (precolored(g, t, {1, 1, 2}) || precolored(g, t, {1, 2, 1}) || precolored(g, t, {2, 1, 1})) mask |= 0b010;
    if (precolored(g, t, {1, 2, 3})) mask |= 0b100;
    return mask;
}

bool is_feasible_triple(const Graph& g, VertexId x, VertexId y, VertexId z) {
    if ((triple_color_sizes(g, x, y, z) & 0b011) == 0) return false;
    return !is_chain_connected(g, {x, y, z});
}

bool is_blocked_triple(const ColoringProfile& profile, VertexId x, VertexId y, VertexId z) {
    if (!profile.colorable()) fail(ErrorCode::NoColoring, "graph is not 3-colorable");
    auto mask = profile.triple_mask(x, y, z);
    return mask == 0b100 || mask == 0b001;
}

bool is_blocked_triple(const Graph& g, VertexId x, VertexId y, VertexId z) {
    auto mask = triple_color_sizes(g, x, y, z);
    if (mask == 0) fail(ErrorCode::NoColoring, "graph is not 3-colorable");
    return mask == 0b100 || mask == 0b001;
}

bool feasible_from_coloring(const Graph& g, const std::vector<VertexId>& x) {
    if (x.size() != 3) fail(ErrorCode::InvalidInput, "expected a triple");
    if (!is_k4_minor_free(g)) fail(ErrorCode::InvalidInput, "graph must be K4-minor-free");
    check_vertex_set(g, x);
    ColoringProfile profile(g);
    if ((profile.triple_mask(x[0], x[1], x[2]) & 0b010) == 0) return true;
    return is_feasible_triple(g, diamond_link_graph(g), profile, x[0], x[1], x[2]);
}

bool edge_feasibility_dichotomy(const Graph& g, VertexId x, VertexId x2, VertexId y, VertexId z) {
    check_vertex_set(g, {x, x2, y, z});
    if (!g.adjacent(x, x2)) fail(ErrorCode::InvalidInput, "x and x' must be adjacent");
    if (!is_k4_minor_free(g)) fail(ErrorCode::InvalidInput, "graph must be K4-minor-free");
    ColoringProfile profile(g);
    auto links = diamond_link_graph(g);
    return is_feasible_triple(g, links, profile, x, y, z) || is_feasible_triple(g, links, profile, x2, y, z);
}

bool is_genuine_2_vertex(const Graph& g, VertexId v) {
    if (g.degree(v) != 2) return false;
    VertexId u[2] = {g.neighbors(v)[0], g.neighbors(v)[1]};
    if (!g.adjacent(u[0], u[1])) return false;
    VertexId w[2] = {-1, -1};
    for (int i = 0; i < 2; ++i) {
        if (g.degree(u[i]) != 3) continue;
        for (VertexId t : g.neighbors(u[i]))
            if (t != v && t != u[1 - i]) w[i] = t;
    }
    for (int i = 0; i < 2; ++i)
        if (w[i] >= 0 && g.adjacent(w[i], u[1 - i])) return true;
    return w[0] >= 0 && w[1] >= 0 && w[0] != w[1] && g.adjacent(w[0], w[1]);
}

namespace {

void check_genuine_preconditions(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) fail(ErrorCode::InvalidInput, "graph must be connected");
    if (g.min_degree() < 2) fail(ErrorCode::InvalidInput, "minimum degree must be at least 2");
    if (g.max_degree() == 2) fail(ErrorCode::InvalidInput, "graph is a cycle");
    if (!is_k4_minor_free(g)) fail(ErrorCode::InvalidInput, "graph must be K4-minor-free");
}

} // namespace

std::vector<VertexId> genuine_2_vertices(const Graph& g) {
    check_genuine_preconditions(g);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.n(); ++v)
        if (is_genuine_2_vertex(g, v)) out.push_back(v);
    return out;
}

bool two_nonadjacent_2vertices(const Graph& g) {
    check_genuine_preconditions(g);
    for (VertexId a = 0; a < g.n(); ++a)
        for (VertexId b = a + 1; b < g.n(); ++b)
            if (g.degree(a) == 2 && g.degree(b) == 2 && !g.adjacent(a, b)) return true;
    return false;
}

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> stack;
    int timer = 0;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (VertexId w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                stack.push_back({std::min(v, w), std::max(v, w)});
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0) is_cut[v] = true;
                    std::vector<Edge> block;
                    Edge last{std::min(v, w), std::max(v, w)};
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == last) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back({std::min(v, w), std::max(v, w)});
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent < 0 && children > 1) is_cut[v] = true;
    };
    for (VertexId v = 0; v < n; ++v) {
        if (disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            out.blocks.emplace_back();
            out.block_vertices.push_back({v});
            disc[v] = timer++;
            continue;
        }
        dfs(v, -1);
    }
    out.block_vertices.resize(out.blocks.size());
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        if (out.blocks[i].empty()) continue;
        std::set<VertexId> vs;
        for (auto [a, b] : out.blocks[i]) vs.insert({a, b});
        out.block_vertices[i].assign(vs.begin(), vs.end());
    }
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

bool is_gallai_tree(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) fail(ErrorCode::InvalidInput, "graph must be connected");
    auto bd = block_decomposition(g);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        const auto k = static_cast<long>(bd.block_vertices[i].size());
        const auto e = static_cast<long>(bd.blocks[i].size());
        bool complete = e == k * (k - 1) / 2;
        bool odd_cycle = k % 2 == 1 && e == k;  // a 2-connected block with |E| = |V| is a cycle
        if (!complete && !odd_cycle) return false;
    }
    return true;
}

} // namespace atx
