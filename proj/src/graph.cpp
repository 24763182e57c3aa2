#include "atx/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace atx {

int Graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int best = static_cast<int>(adj_[0].size());
    for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
    return best;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    if (!masks_.empty()) return (masks_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::uint64_t Graph::mask(VertexId v) const {
    if (masks_.empty()) fail(ErrorCode::TooLarge, "bitset algorithms need at most 64 vertices");
    return masks_[v];
}

std::uint64_t Graph::all_vertices_mask() const {
    if (n() > kMaxMaskVertices) fail(ErrorCode::TooLarge, "bitset algorithms need at most 64 vertices");
    return n() == 64 ? ~0ULL : ((1ULL << n()) - 1);
}

std::optional<int> Graph::edge_index(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Graph make_graph(int n, std::span<const Edge> edges) {
    if (n < 0) fail(ErrorCode::InvalidParameter, "negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) fail(ErrorCode::InvalidEdge, "loop at " + std::to_string(u));
        g.edges_.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    if (n <= kMaxMaskVertices) {
        g.masks_.assign(n, 0);
        for (auto [u, v] : g.edges_) {
            g.masks_[u] |= 1ULL << v;
            g.masks_[v] |= 1ULL << u;
        }
    }
    return g;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept) {
    Subgraph s;
    s.from_parent.assign(g.n(), -1);
    std::vector<VertexId> sorted(kept.begin(), kept.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (VertexId v : sorted) {
        if (v < 0 || v >= g.n()) fail(ErrorCode::InvalidParameter, "vertex out of range");
        s.from_parent[v] = static_cast<int>(s.to_parent.size());
        s.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (s.from_parent[u] >= 0 && s.from_parent[v] >= 0) edges.push_back({s.from_parent[u], s.from_parent[v]});
    s.graph = make_graph(static_cast<int>(s.to_parent.size()), edges);
    return s;
}

Subgraph delete_vertices(const Graph& g, std::span<const VertexId> removed) {
    std::vector<bool> gone(g.n(), false);
    for (VertexId v : removed) {
        if (v < 0 || v >= g.n()) fail(ErrorCode::InvalidParameter, "vertex out of range");
        gone[v] = true;
    }
    std::vector<VertexId> kept;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!gone[v]) kept.push_back(v);
    return induced_subgraph(g, kept);
}

ChainOfDiamonds chain_of_diamonds(int diamonds) {
    if (diamonds < 1) fail(ErrorCode::InvalidParameter, "a chain of diamonds needs n >= 1");
    std::vector<Edge> edges;
    ChainOfDiamonds d;
    d.hubs.push_back(0);
    for (int i = 1; i <= diamonds; ++i) {
        VertexId prev = 3 * (i - 1), v = 3 * i - 2, w = 3 * i - 1, u = 3 * i;
        edges.insert(edges.end(), {{prev, v}, {prev, w}, {v, w}, {v, u}, {w, u}});
        d.hubs.push_back(u);
    }
    d.graph = make_graph(3 * diamonds + 1, edges);
    return d;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(g.n(), false);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        stack.assign(1, s);
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int degeneracy(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        removed[pick] = true;
        for (VertexId w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    return best;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return make_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) fail(ErrorCode::InvalidParameter, "cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return make_graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return make_graph(n, edges);
}

Graph subdivide_all_edges(const Graph& g, int times) {
    std::vector<Edge> edges;
    int next = g.n();
    for (auto [u, v] : g.edges()) {
        VertexId prev = u;
        for (int t = 0; t < times; ++t) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, v});
    }
    return make_graph(next, edges);
}

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& e : instances) d += (e.u == v) + (e.v == v);
    return d;
}

MultiGraph contract_two_chains(const Graph& g, std::span<const VertexId> keep) {
    const int n = g.n();
    std::vector<bool> kept(n, false);
    for (VertexId v : keep) {
        if (v < 0 || v >= n) fail(ErrorCode::InvalidParameter, "keep vertex out of range");
        kept[v] = true;
    }
    auto removable = [&](VertexId v) { return g.degree(v) == 2 && !kept[v]; };

    MultiGraph h;
    std::vector<int> id(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (!removable(v)) {
            id[v] = h.n++;
            h.source.push_back(v);
        }

    // Walk out of every branch vertex along each incident edge; each chain is visited from both
    // ends, so keep it only from the lexicographically smaller (start, first-step) side.
    std::vector<bool> interior_seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
        if (removable(s)) continue;
        for (VertexId first : g.neighbors(s)) {
            std::vector<VertexId> path{s};
            VertexId prev = s, cur = first;
            while (removable(cur)) {
                path.push_back(cur);
                auto nb = g.neighbors(cur);
                VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            path.push_back(cur);
            VertexId t = cur;
            VertexId last_step = path[path.size() - 2];
            bool take;
            if (t != s) take = s < t;
            else take = first < last_step;  // loop or digon closing back at s
            if (path.size() == 2) take = s < t;  // original edge
            if (!take) continue;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) interior_seen[path[i]] = true;
            EdgeInstance inst;
            inst.u = id[s];
            inst.v = id[t];
            if (path.size() > 2) inst.path = path;
            if (inst.u > inst.v) {
                std::swap(inst.u, inst.v);
                std::reverse(inst.path.begin(), inst.path.end());
            }
            h.instances.push_back(std::move(inst));
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (removable(v) && !interior_seen[v])
            fail(ErrorCode::UnanchoredComponent, "component of suppressible 2-vertices containing " + std::to_string(v));
    return h;
}

} // namespace atx
