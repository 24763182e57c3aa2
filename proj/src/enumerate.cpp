#include "atx/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "atx/graph_io.hpp"

namespace atx {

namespace {

using Cells = std::vector<std::vector<VertexId>>;

std::vector<int> signature(const Graph& g, VertexId v, const std::vector<std::uint64_t>& cell_masks) {
    std::vector<int> sig(cell_masks.size());
    for (std::size_t j = 0; j < cell_masks.size(); ++j) sig[j] = std::popcount(g.mask(v) & cell_masks[j]);
    return sig;
}

std::vector<std::uint64_t> masks_of(const Cells& cells) {
    std::vector<std::uint64_t> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) {
        std::uint64_t m = 0;
        for (VertexId v : c) m |= 1ULL << v;
        masks.push_back(m);
    }
    return masks;
}

// Splits cells until every cell is equitable. Split order depends only on invariant data,
// so isomorphic inputs end in corresponding partitions.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto masks = masks_of(cells);
        for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
            if (cells[ci].size() < 2) continue;
            std::vector<std::pair<std::vector<int>, VertexId>> keyed;
            for (VertexId v : cells[ci]) keyed.emplace_back(signature(g, v, masks), v);
            std::sort(keyed.begin(), keyed.end());
            if (keyed.front().first == keyed.back().first) continue;
            Cells pieces;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                pieces.back().push_back(keyed[i].second);
            }
            cells.erase(cells.begin() + static_cast<long>(ci));
            cells.insert(cells.begin() + static_cast<long>(ci), pieces.begin(), pieces.end());
            changed = true;
        }
    }
}

// Cell sizes plus the cell-to-cell neighbour count matrix.
std::vector<int> shape(const Graph& g, const Cells& cells) {
    auto masks = masks_of(cells);
    std::vector<int> out;
    out.push_back(static_cast<int>(cells.size()));
    for (const auto& c : cells) {
        out.push_back(static_cast<int>(c.size()));
        auto sig = signature(g, c.front(), masks);
        out.insert(out.end(), sig.begin(), sig.end());
    }
    return out;
}

Cells unit_partition(const Graph& g) {
    Cells cells(1);
    cells[0].resize(g.n());
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine(g, cells);
    return cells;
}

Cells individualize(const Graph& g, Cells cells, std::size_t ci, VertexId v) {
    auto& cell = cells[ci];
    cell.erase(std::find(cell.begin(), cell.end(), v));
    cells.insert(cells.begin() + static_cast<long>(ci), std::vector<VertexId>{v});
    refine(g, cells);
    return cells;
}

bool iso_search(const Graph& a, const Cells& pa, const Graph& b, const Cells& pb) {
    if (shape(a, pa) != shape(b, pb)) return false;
    std::size_t ci = 0;
    while (ci < pa.size() && pa[ci].size() == 1) ++ci;
    if (ci == pa.size()) {
        std::vector<VertexId> map(a.n());
        for (std::size_t i = 0; i < pa.size(); ++i) map[pa[i][0]] = pb[i][0];
        for (auto [u, v] : a.edges())
            if (!b.adjacent(map[u], map[v])) return false;
        return a.m() == b.m();
    }
    Cells next_a = individualize(a, pa, ci, pa[ci][0]);
    for (VertexId w : pb[ci])
        if (iso_search(a, next_a, b, individualize(b, pb, ci, w))) return true;
    return false;
}

} // namespace

std::string refinement_invariant(const Graph& g) {
    auto sh = shape(g, unit_partition(g));
    std::string key;
    key.reserve(sh.size() * 2 + 4);
    key += std::to_string(g.n()) + ':' + std::to_string(g.m()) + ':';
    for (int x : sh) {
        key.push_back(static_cast<char>('0' + x / 64));
        key.push_back(static_cast<char>('0' + x % 64));
    }
    return key;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (a.n() == 0) return true;
    return iso_search(a, unit_partition(a), b, unit_partition(b));
}

bool IsoClassSet::insert(const Graph& g) {
    auto& bucket = buckets_[refinement_invariant(g)];
    for (int idx : bucket)
        if (are_isomorphic(graphs_[idx], g)) return false;
    bucket.push_back(static_cast<int>(graphs_.size()));
    graphs_.push_back(g);
    return true;
}

namespace {

Graph add_vertex(const Graph& g, std::uint64_t neighbours) {
    std::vector<Edge> edges(g.edges());
    const VertexId fresh = g.n();
    for (VertexId v = 0; v < g.n(); ++v)
        if ((neighbours >> v) & 1) edges.push_back({v, fresh});
    return make_graph(g.n() + 1, edges);
}

void sort_level(std::vector<Graph>& level) {
    std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
    for (auto& g : level) keyed.push_back({{g.m(), emit_graph6(g)}, std::move(g)});
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& k : keyed) level.push_back(std::move(k.second));
}

} // namespace

void enumerate_levels(const EnumerationOptions& options,
                      const std::function<bool(int, const std::vector<Graph>&)>& visit) {
    if (options.max_vertices > 12) fail(ErrorCode::TooLarge, "exhaustive enumeration is limited to 12 vertices");
    auto accept = [&](const Graph& g) { return !options.hereditary || options.hereditary(g); };
    std::vector<Graph> level;
    Graph single = make_graph(1, {});
    if (options.max_vertices >= 1 && accept(single)) level.push_back(single);
    for (int n = 1; n <= options.max_vertices && !level.empty(); ++n) {
        if (n >= options.min_vertices && !visit(n, level)) return;
        if (n == options.max_vertices) break;
        IsoClassSet next;
        for (const auto& g : level) {
            const std::uint64_t subsets = 1ULL << n;
            for (std::uint64_t s = options.connected_only ? 1 : 0; s < subsets; ++s) {
                Graph h = add_vertex(g, s);
                if (accept(h)) next.insert(h);
            }
        }
        level = next.graphs();
        sort_level(level);
    }
}

std::vector<Graph> enumerate_graphs(const EnumerationOptions& options) {
    std::vector<Graph> result;
    enumerate_levels(options, [&](int, const std::vector<Graph>& level) {
        result.insert(result.end(), level.begin(), level.end());
        return true;
    });
    return result;
}

std::vector<Graph> enumerate_two_trees(int max_vertices) {
    std::vector<Graph> result;
    if (max_vertices < 2) return result;
    std::vector<Graph> level{make_graph(2, {{0, 1}})};
    for (int n = 2; n <= max_vertices; ++n) {
        result.insert(result.end(), level.begin(), level.end());
        if (n == max_vertices) break;
        IsoClassSet next;
        for (const auto& g : level)
            for (auto [u, v] : g.edges()) next.insert(add_vertex(g, (1ULL << u) | (1ULL << v)));
        level = next.graphs();
        sort_level(level);
    }
    return result;
}

} // namespace atx
