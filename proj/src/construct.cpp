#include "atx/construct.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "atx/mad.hpp"
#include "atx/structure.hpp"

namespace atx {

std::string_view to_string(TraceTag tag) {
    switch (tag) {
    case TraceTag::Peel2: return "peel2";
    case TraceTag::Pendant: return "pendant";
    case TraceTag::Case1Triangle: return "case1-triangle";
    case TraceTag::Case2Diamond: return "case2-diamond";
    case TraceTag::KernelSearch: return "kernel-search";
    case TraceTag::CutvertexGlue: return "cutvertex-glue";
    case TraceTag::Recover: return "recover";
    case TraceTag::Base: return "base";
    }
    return "?";
}

std::string_view to_string(ImpossibleReason reason) {
    switch (reason) {
    case ImpossibleReason::Chained: return "chained";
    case ImpossibleReason::Infeasible: return "infeasible";
    case ImpossibleReason::Blocked: return "blocked";
    }
    return "?";
}

bool ConstructionTrace::flagged() const {
    return std::any_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.note.starts_with("fallback"); });
}

namespace {

using Anchors = std::vector<std::pair<VertexId, int>>;

// A graph met during the recursion, with ids of the input graph.
struct Local {
    Graph g;
    std::vector<VertexId> root;
    std::vector<int> map;  // parent local id -> this local id, -1 if removed
};

Local remove_vertices(const Graph& g, const std::vector<VertexId>& root, std::vector<VertexId> removed) {
    Subgraph s = delete_vertices(g, removed);
    Local out{std::move(s.graph), {}, std::move(s.from_parent)};
    for (VertexId v : s.to_parent) out.root.push_back(root[v]);
    return out;
}

Local keep_vertices(const Graph& g, const std::vector<VertexId>& root, const std::vector<VertexId>& kept) {
    Subgraph s = induced_subgraph(g, kept);
    Local out{std::move(s.graph), {}, std::move(s.from_parent)};
    for (VertexId v : s.to_parent) out.root.push_back(root[v]);
    return out;
}

VertexId third_neighbor(const Graph& g, VertexId u, VertexId a, VertexId b) {
    for (VertexId t : g.neighbors(u))
        if (t != a && t != b) return t;
    return -1;
}

bool chained(const Graph& g, VertexId a, VertexId b) { return is_chain_connected(g, {a, b}); }

bool feasible(const Graph& g, VertexId a, VertexId b, VertexId c) { return is_feasible_triple(g, a, b, c); }

class Builder {
public:
    ConstructionTrace trace;
    int largest_kernel = 0;

    void push(TraceTag tag, const std::vector<VertexId>& root, std::vector<VertexId> vertices, const std::vector<Arc>& arcs,
              std::string note = {}) {
        TraceStep step{tag, {}, {}, std::move(note)};
        for (VertexId v : vertices) step.vertices.push_back(root[v]);
        for (auto a : arcs) step.arcs.push_back({root[a.tail], root[a.head]});
        trace.steps.push_back(std::move(step));
    }

    // Splits into components and hands each its anchors (K4-minor-free inputs).
    void solve(const Graph& g, const std::vector<VertexId>& root, const Anchors& anchors) {
        if (g.n() == 0) return;
        if (is_connected(g)) {
            component(g, root, anchors);
            return;
        }
        for (const auto& comp : connected_components(g)) {
            Local c = keep_vertices(g, root, comp);
            Anchors inner;
            for (auto [v, cap] : anchors)
                if (c.map[v] >= 0) inner.push_back({c.map[v], cap});
            component(c.g, c.root, inner);
        }
    }

    void ext_pair(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, bool sink_y);
    void ext_triple(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z);
    void ext_221(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z);
    void ext_mad(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z);

private:
    void component(const Graph& g, const std::vector<VertexId>& root, Anchors anchors) {
        std::stable_sort(anchors.begin(), anchors.end(), [](auto& a, auto& b) { return a.second > b.second; });
        switch (anchors.size()) {
        case 0: acyclic_base(g, root); return;
        case 1: {
            auto [a, cap] = anchors[0];
            if (g.n() == 1) return;
            VertexId b = g.neighbors(a)[0];  // a neighbour is never chained to a
            if (cap == 1)
                ext_pair(g, root, b, a, true);
            else
                ext_pair(g, root, a, b, false);
            return;
        }
        case 2:
            ensure(anchors[0].second == 2, "two cap-1 anchors are not supported");
            ext_pair(g, root, anchors[0].first, anchors[1].first, anchors[1].second == 1);
            return;
        case 3:
            ensure(anchors[2].second == 2, "three anchors must all have cap 2");
            ext_triple(g, root, anchors[0].first, anchors[1].first, anchors[2].first);
            return;
        }
        ensure(false, "unsupported anchor set");
    }

    // Acyclic orientation along a degeneracy order.
    void acyclic_base(const Graph& g, const std::vector<VertexId>& root) {
        if (g.m() == 0) return;
        std::vector<int> deg(g.n());
        std::vector<bool> gone(g.n(), false);
        for (VertexId v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
        std::vector<Arc> arcs;
        std::vector<VertexId> all;
        for (int step = 0; step < g.n(); ++step) {
            VertexId best = -1;
            for (VertexId v = 0; v < g.n(); ++v)
                if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
            gone[best] = true;
            all.push_back(best);
            for (VertexId w : g.neighbors(best))
                if (!gone[w]) {
                    arcs.push_back({best, w});
                    --deg[w];
                }
        }
        push(TraceTag::Base, root, all, arcs, "acyclic");
    }

    // Path or cycle: a path points towards `sink`; a cycle becomes two directed paths
    // from the smallest non-anchor to `sink`.
    void path_or_cycle(const Graph& g, const std::vector<VertexId>& root, VertexId sink, const std::vector<VertexId>& anchors) {
        std::vector<VertexId> all(g.n());
        for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
        std::vector<Arc> arcs;
        if (g.m() == g.n() - 1) {
            std::vector<int> seen(g.n(), 0);
            std::deque<VertexId> queue{sink};
            seen[sink] = 1;
            while (!queue.empty()) {
                VertexId v = queue.front();
                queue.pop_front();
                for (VertexId w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        arcs.push_back({w, v});
                        queue.push_back(w);
                    }
            }
            push(TraceTag::Base, root, all, arcs, "path");
            return;
        }
        VertexId s = -1;
        for (VertexId v = 0; v < g.n() && s < 0; ++v)
            if (std::find(anchors.begin(), anchors.end(), v) == anchors.end()) s = v;
        ensure(s >= 0, "cycle consists of anchors only");
        for (VertexId first : g.neighbors(s)) {
            VertexId prev = s, cur = first;
            arcs.push_back({s, first});
            while (cur != sink) {
                VertexId next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                arcs.push_back({cur, next});
                prev = cur;
                cur = next;
            }
        }
        push(TraceTag::Base, root, all, arcs, "cycle");
    }

    bool pair_cases(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, bool sink_y);
    bool triple_cases(const Graph& g, const std::vector<VertexId>& root, const std::array<VertexId, 3>& anchors);
    bool peel(const Graph& g, const std::vector<VertexId>& root, const std::vector<VertexId>& anchors,
              const std::function<void(const Local&)>& recurse) {
        for (VertexId v = 0; v < g.n(); ++v) {
            if (g.degree(v) > 2 || std::find(anchors.begin(), anchors.end(), v) != anchors.end()) continue;
            Local sub = remove_vertices(g, root, {v});
            recurse(sub);
            std::vector<Arc> arcs;
            for (VertexId w : g.neighbors(v)) arcs.push_back({v, w});
            push(TraceTag::Peel2, root, {v}, arcs);
            return true;
        }
        return false;
    }
    void capped_fallback(const Graph& g, const std::vector<VertexId>& root, const Anchors& anchors, const std::string& why) {
        std::vector<std::pair<VertexId, int>> a(anchors);
        auto cert = is_f_AT(g, extendability_capacity(g.n(), a));
        ensure(cert.has_value(), "capped search found no orientation (" + why + ")");
        std::vector<VertexId> all(g.n());
        for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
        push(TraceTag::KernelSearch, root, all, cert->orientation.arcs(), "fallback: " + why);
    }
    void kernel(const Graph& g, const std::vector<VertexId>& root, const std::array<VertexId, 3>& anchors);
};

void Builder::ext_pair(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, bool sink_y) {
    if (!is_connected(g)) {
        solve(g, root, {{x, 2}, {y, sink_y ? 1 : 2}});
        return;
    }
    if (g.max_degree() <= 2) {
        path_or_cycle(g, root, y, {x, y});
        return;
    }
    auto recurse_same = [&](const Local& s) { ext_pair(s.g, s.root, s.map[x], s.map[y], sink_y); };
    if (peel(g, root, {x, y}, recurse_same)) return;

    if (g.degree(x) == 1) {
        VertexId p = g.neighbors(x)[0];
        Local s = remove_vertices(g, root, {x});
        VertexId ys = s.map[y], z = -1;
        for (VertexId v = 0; v < s.g.n() && z < 0; ++v)
            if (v != ys && !chained(s.g, v, ys)) z = v;
        ensure(z >= 0, "no partner unchained with y");
        ext_pair(s.g, s.root, z, ys, true);
        push(TraceTag::Pendant, root, {x, p}, {{x, p}});
        return;
    }
    if (g.degree(y) == 1) {
        VertexId z = g.neighbors(y)[0];
        Local s = remove_vertices(g, root, {y});
        VertexId xs = s.map[x];
        if (z == x) {
            VertexId w = -1;
            for (VertexId v = 0; v < s.g.n() && w < 0; ++v)
                if (v != xs && !chained(s.g, v, xs)) w = v;
            ensure(w >= 0, "no partner unchained with x");
            ext_pair(s.g, s.root, w, xs, true);
        } else {
            ext_pair(s.g, s.root, s.map[z], xs, false);
        }
        push(TraceTag::Pendant, root, {y, z}, {{z, y}});
        return;
    }
    if (pair_cases(g, root, x, y, sink_y)) return;
    if (!sink_y && pair_cases(g, root, y, x, false)) return;
    ensure(false, "no reducible configuration at a genuine 2-vertex");
}

bool Builder::pair_cases(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, bool sink_y) {
    if (g.degree(x) != 2) return false;
    const VertexId a = g.neighbors(x)[0], b = g.neighbors(x)[1];
    if (!g.adjacent(a, b)) return false;
    const std::array<std::pair<VertexId, VertexId>, 2> labellings{{{a, b}, {b, a}}};

    for (auto [u1, u2] : labellings) {
        if (g.degree(u1) != 3) continue;
        VertexId w1 = third_neighbor(g, u1, x, u2);
        if (!g.adjacent(u2, w1)) continue;
        Local s = remove_vertices(g, root, {x, u1});
        if (w1 != y) {
            if (sink_y && chained(s.g, s.map[w1], s.map[y])) continue;
            ext_pair(s.g, s.root, s.map[w1], s.map[y], sink_y);
            push(TraceTag::Case1Triangle, root, {x, u1, u2, w1}, {{w1, u1}, {u1, x}, {x, u2}, {u1, u2}});
            return true;
        }
        if (sink_y || chained(s.g, s.map[u2], s.map[y])) continue;
        ext_pair(s.g, s.root, s.map[u2], s.map[y], true);
        push(TraceTag::Case1Triangle, root, {x, u1, u2, y}, {{y, u1}, {u1, x}, {x, u2}, {u1, u2}});
        return true;
    }

    for (auto [u1, u2] : labellings) {
        if (g.degree(u1) != 3 || g.degree(u2) != 3) continue;
        VertexId w1 = third_neighbor(g, u1, x, u2), w2 = third_neighbor(g, u2, x, u1);
        if (w1 == w2 || !g.adjacent(w1, w2)) continue;
        for (auto [u, other, w] : {std::tuple{u1, u2, w1}, std::tuple{u2, u1, w2}}) {
            if (w == y) continue;
            Local s = remove_vertices(g, root, {x, u});
            if (chained(s.g, s.map[w], s.map[y])) continue;
            ext_pair(s.g, s.root, s.map[w], s.map[y], true);
            push(TraceTag::Case2Diamond, root, {x, u, other, w}, {{w, u}, {u, x}, {x, other}, {u, other}});
            return true;
        }
    }
    return false;
}

void Builder::ext_triple(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z) {
    if (!is_connected(g)) {
        solve(g, root, {{x, 2}, {y, 2}, {z, 2}});
        return;
    }
    if (g.max_degree() <= 2) {
        path_or_cycle(g, root, z, {x, y, z});
        return;
    }
    auto recurse_same = [&](const Local& s) { ext_triple(s.g, s.root, s.map[x], s.map[y], s.map[z]); };
    if (peel(g, root, {x, y, z}, recurse_same)) return;

    const std::array<VertexId, 3> anchors{x, y, z};
    for (int i = 0; i < 3; ++i) {
        VertexId a = anchors[i];
        if (g.degree(a) != 1) continue;
        VertexId p = g.neighbors(a)[0];
        VertexId b = anchors[(i + 1) % 3], c = anchors[(i + 2) % 3];
        Local s = remove_vertices(g, root, {a});
        ext_pair(s.g, s.root, s.map[b], s.map[c], false);
        push(TraceTag::Pendant, root, {a, p}, {{a, p}});
        return;
    }
    if (triple_cases(g, root, anchors)) return;
    // Happens when the three anchors are the only 2-vertices and none is genuine (K_{2,3}).
    capped_fallback(g, root, {{x, 2}, {y, 2}, {z, 2}}, "no reducible configuration for the triple");
}

bool Builder::triple_cases(const Graph& g, const std::vector<VertexId>& root, const std::array<VertexId, 3>& anchors) {
    auto is_anchor = [&](VertexId v) { return std::find(anchors.begin(), anchors.end(), v) != anchors.end(); };

    // Case 1: u2 w1 is an edge.
    for (int i = 0; i < 3; ++i) {
        const VertexId x = anchors[i];
        if (g.degree(x) != 2) continue;
        const VertexId p = g.neighbors(x)[0], q = g.neighbors(x)[1];
        if (!g.adjacent(p, q)) continue;
        const VertexId o1 = anchors[(i + 1) % 3], o2 = anchors[(i + 2) % 3];
        for (auto [u1, u2] : {std::pair{p, q}, std::pair{q, p}}) {
            if (g.degree(u1) != 3) continue;
            const VertexId w1 = third_neighbor(g, u1, x, u2);
            if (!g.adjacent(u2, w1)) continue;

            for (auto [y, z] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
                if (u1 != z || w1 != y || g.degree(y) != 2) continue;
                // u2 separates {x,y,z} from the rest.
                Local s = remove_vertices(g, root, {x, y, z});
                solve(s.g, s.root, {{s.map[u2], 1}});
                push(TraceTag::CutvertexGlue, root, {x, y, z, u2}, {{u2, y}, {y, z}, {z, u2}, {u2, x}, {x, z}});
                return true;
            }
            if (is_anchor(u1)) continue;
            Local s = remove_vertices(g, root, {x, u1});
            if (!is_anchor(w1)) {
                if (!feasible(s.g, s.map[w1], s.map[o1], s.map[o2])) continue;
                ext_triple(s.g, s.root, s.map[w1], s.map[o1], s.map[o2]);
                push(TraceTag::Case1Triangle, root, {x, u1, u2, w1}, {{w1, u1}, {u1, x}, {x, u2}, {u1, u2}});
                return true;
            }
            const VertexId y = w1, z = w1 == o1 ? o2 : o1;
            if (chained(s.g, s.map[y], s.map[z])) continue;
            ext_pair(s.g, s.root, s.map[z], s.map[y], true);
            push(TraceTag::Case1Triangle, root, {x, u1, u2, y}, {{y, u1}, {u1, x}, {x, u2}, {u1, u2}});
            return true;
        }
    }

    // Case 2: both triangle vertices are 3-vertices whose third neighbours are adjacent.
    for (int i = 0; i < 3; ++i) {
        const VertexId x = anchors[i];
        if (g.degree(x) != 2) continue;
        const VertexId p = g.neighbors(x)[0], q = g.neighbors(x)[1];
        if (!g.adjacent(p, q)) continue;
        const VertexId o1 = anchors[(i + 1) % 3], o2 = anchors[(i + 2) % 3];
        for (auto [u1, u2] : {std::pair{p, q}, std::pair{q, p}}) {
            if (g.degree(u1) != 3 || g.degree(u2) != 3 || is_anchor(u1) || is_anchor(u2)) continue;
            VertexId w1 = third_neighbor(g, u1, x, u2), w2 = third_neighbor(g, u2, x, u1);
            if (w1 == w2 || !g.adjacent(w1, w2)) continue;
            Local s = remove_vertices(g, root, {x, u1, u2});
            auto m = [&](VertexId v) { return s.map[v]; };
            const int hits = is_anchor(w1) + is_anchor(w2);

            if (hits == 2) {
                const VertexId y = w1, z = w2;
                if (chained(s.g, m(y), m(z))) continue;
                ext_pair(s.g, s.root, m(z), m(y), true);
                push(TraceTag::Case2Diamond, root, {x, u1, u2, y, z}, {{y, u1}, {u1, x}, {x, u2}, {u1, u2}, {u2, z}});
                return true;
            }
            if (hits == 0) {
                for (auto [wa, ua, ub, wb] : {std::tuple{w1, u1, u2, w2}, std::tuple{w2, u2, u1, w1}}) {
                    if (!feasible(s.g, m(wa), m(o1), m(o2))) continue;
                    ext_triple(s.g, s.root, m(wa), m(o1), m(o2));
                    push(TraceTag::Case2Diamond, root, {x, ua, ub, wa, wb},
                         {{wa, ua}, {ua, x}, {x, ub}, {ua, ub}, {ub, wb}});
                    return true;
                }
                continue;
            }
            // Exactly one anchor among w1, w2; name it y and its side u1.
            VertexId a1 = u1, a2 = u2, b1 = w1, b2 = w2;
            if (is_anchor(w2)) {
                std::swap(a1, a2);
                std::swap(b1, b2);
            }
            const VertexId y = b1, z = y == o1 ? o2 : o1;
            if (!chained(s.g, m(y), m(z))) {
                ext_pair(s.g, s.root, m(z), m(y), true);
                push(TraceTag::Case2Diamond, root, {x, a1, a2, y, b2}, {{y, a1}, {a1, x}, {x, a2}, {a1, a2}, {a2, b2}});
                return true;
            }
            if (!feasible(s.g, m(b2), m(y), m(z))) continue;
            ext_triple(s.g, s.root, m(b2), m(y), m(z));
            push(TraceTag::Case2Diamond, root, {x, a1, a2, y, b2}, {{b2, a2}, {a2, x}, {x, a1}, {a2, a1}, {a1, y}});
            return true;
        }
    }
    return false;
}

void Builder::ext_221(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z) {
    if (g.n() <= 3) {
        // Forest: every tree points at its preferred root.
        std::vector<Arc> arcs;
        std::vector<int> seen(g.n(), 0);
        std::vector<VertexId> order{z, y, x};
        for (VertexId v = 0; v < g.n(); ++v) order.push_back(v);
        for (VertexId r : order) {
            if (seen[r]) continue;
            seen[r] = 1;
            std::deque<VertexId> queue{r};
            while (!queue.empty()) {
                VertexId v = queue.front();
                queue.pop_front();
                for (VertexId w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        arcs.push_back({w, v});
                        queue.push_back(w);
                    }
            }
        }
        std::vector<VertexId> all(g.n());
        for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
        push(TraceTag::Base, root, all, arcs, "forest");
        return;
    }
    auto recurse = [&](const Local& s) { ext_221(s.g, s.root, s.map[x], s.map[y], s.map[z]); };
    if (peel(g, root, {x, y, z}, recurse)) return;
    // Every 2^- vertex is an anchor, e.g. K_{1,3} or K_{2,3} anchored on the small side.
    capped_fallback(g, root, {{x, 2}, {y, 2}, {z, 1}}, "no 2-vertex outside the anchors");
}

void Builder::ext_mad(const Graph& g, const std::vector<VertexId>& root, VertexId x, VertexId y, VertexId z) {
    const std::array<VertexId, 3> anchors{x, y, z};
    if (!is_connected(g)) {
        for (const auto& comp : connected_components(g)) {
            Local c = keep_vertices(g, root, comp);
            Anchors inner;
            for (VertexId a : anchors)
                if (c.map[a] >= 0) inner.push_back({c.map[a], 2});
            if (inner.size() == 3)
                ext_mad(c.g, c.root, inner[0].first, inner[1].first, inner[2].first);
            else if (inner.empty() || is_k4_minor_free(c.g))
                solve(c.g, c.root, inner);
            else
                capped_fallback(c.g, c.root, inner, "component with fewer than three anchors");
        }
        return;
    }
    if (g.max_degree() <= 2) {
        path_or_cycle(g, root, z, {x, y, z});
        return;
    }
    auto recurse_same = [&](const Local& s) { ext_mad(s.g, s.root, s.map[x], s.map[y], s.map[z]); };
    if (peel(g, root, {x, y, z}, recurse_same)) return;

    for (int i = 0; i < 3; ++i) {
        VertexId a = anchors[i];
        if (g.degree(a) != 1) continue;
        VertexId p = g.neighbors(a)[0];
        VertexId b = anchors[(i + 1) % 3], c = anchors[(i + 2) % 3];
        Local s = remove_vertices(g, root, {a});
        for (VertexId v = 0; v < s.g.n(); ++v) {
            if (v == s.map[b] || v == s.map[c] || is_blocked_triple(s.g, v, s.map[b], s.map[c])) continue;
            ext_mad(s.g, s.root, v, s.map[b], s.map[c]);
            push(TraceTag::Pendant, root, {a, p}, {{a, p}});
            return;
        }
        capped_fallback(g, root, {{x, 2}, {y, 2}, {z, 2}}, "no re-anchor vertex for a pendant anchor");
        return;
    }

    if (is_k4_minor_free(g)) {
        ensure(is_feasible_triple(g, x, y, z), "non-blocked triple of a K4-minor-free graph must be feasible");
        ext_triple(g, root, x, y, z);
        return;
    }
    kernel(g, root, anchors);
}

void Builder::kernel(const Graph& g, const std::vector<VertexId>& root, const std::array<VertexId, 3>& anchors) {
    auto is_anchor = [&](VertexId v) { return std::find(anchors.begin(), anchors.end(), v) != anchors.end(); };
    int charge = 0, n5 = 0, b = 0;
    bool others_cubic = true;
    for (VertexId v = 0; v < g.n(); ++v) {
        charge += 5 * g.degree(v) - 14;
        n5 += g.degree(v) >= 5;
        if (is_anchor(v)) b += g.degree(v) == 2;
        else others_cubic = others_cubic && g.degree(v) == 3;
    }
    largest_kernel = std::max(largest_kernel, g.n());
    ensure(charge < 0, "kernel violates the degree-charge bound");
    ensure(n5 == 0, "kernel has a 5+-vertex");
    ensure(b >= 2, "kernel has fewer than two anchor 2-vertices");

    std::vector<VertexId> all(g.n());
    for (VertexId v = 0; v < g.n(); ++v) all[v] = v;
    if (b == 3 && others_cubic) {
        auto cert = degree_AT_orientation(g);
        ensure(cert.has_value(), "kernel with a K4 minor is a Gallai tree");
        push(TraceTag::KernelSearch, root, all, cert->orientation.arcs(), "degree-AT");
        return;
    }
    ensure(g.n() <= 8, "kernel exceeds 8 vertices");

    std::vector<int> caps(g.n(), 2);
    for (VertexId a : anchors) caps[a] = 1;
    MultiGraph h = contract_two_chains(g, {});
    const int k = static_cast<int>(h.instances.size());
    std::vector<std::uint8_t> reversed(k, 0);
    for (std::uint64_t bits = 0; bits < (1ULL << k); ++bits) {
        for (int i = 0; i < k; ++i) reversed[i] = (bits >> i) & 1;
        Orientation d = recover_orientation(h, reversed, g.n());
        bool capped = true;
        for (VertexId v = 0; v < g.n() && capped; ++v) capped = d.out_degree(v) <= caps[v];
        if (!capped || compute_diff(d).diff() == 0) continue;
        std::string note = "contracted multigraph: " + std::to_string(h.n) + " vertices, " + std::to_string(k) +
                           " edge instances, orientation mask " + std::to_string(bits);
        std::vector<VertexId> kept;
        for (VertexId v : h.source) kept.push_back(v);
        push(TraceTag::KernelSearch, root, kept, {}, note);
        push(TraceTag::Recover, root, all, d.arcs());
        return;
    }
    auto cert = is_f_AT(g, CapacityMap([&] {
                            std::vector<int> f(caps);
                            for (int& c : f) ++c;
                            return f;
                        }()));
    ensure(cert.has_value(), "no capped AT orientation of the kernel");
    push(TraceTag::KernelSearch, root, all, cert->orientation.arcs(), "direct capped search");
}

void check_anchor_range(const Graph& g, std::initializer_list<VertexId> vs) {
    for (VertexId v : vs)
        if (v < 0 || v >= g.n()) fail(ErrorCode::InvalidInput, "anchor out of range");
    std::set<VertexId> s(vs);
    if (s.size() != vs.size()) fail(ErrorCode::InvalidInput, "anchors must be distinct");
}

std::vector<VertexId> identity(int n) {
    std::vector<VertexId> r(n);
    for (int i = 0; i < n; ++i) r[i] = i;
    return r;
}

Construction finish(const Graph& g, Builder& b, const Anchors& anchors) {
    std::vector<Arc> arcs;
    for (const auto& s : b.trace.steps) arcs.insert(arcs.end(), s.arcs.begin(), s.arcs.end());
    Orientation d;
    try {
        d = Orientation::of_graph(g, arcs);
    } catch (const Error& e) {
        fail(ErrorCode::ContractViolation, std::string("construction does not orient the graph: ") + e.what());
    }
    CapacityMap caps = extendability_capacity(g.n(), anchors);
    ATCertificate cert{std::move(d), caps, {}};
    cert.result = compute_diff(cert.orientation);
    ensure(verify_certificate(g, cert), "constructed orientation fails certification");
    return {std::move(cert), std::move(b.trace)};
}

void require_k4_minor_free(const Graph& g) {
    if (!is_k4_minor_free(g)) fail(ErrorCode::WrongClass, "graph has a K4 minor");
}

} // namespace

Construction construct_22_orientation(const Graph& g, VertexId x, VertexId y) {
    check_anchor_range(g, {x, y});
    require_k4_minor_free(g);
    Builder b;
    b.ext_pair(g, identity(g.n()), x, y, false);
    return finish(g, b, {{x, 2}, {y, 2}});
}

ConstructOutcome construct_21_orientation(const Graph& g, VertexId x, VertexId y) {
    check_anchor_range(g, {x, y});
    require_k4_minor_free(g);
    ConstructOutcome out;
    if (is_chain_connected(g, {x, y})) {
        out.reason = ImpossibleReason::Chained;
        out.witness_lists = refutation_assignments(WitnessKind::PairSink, g.n(), {x, y});
        return out;
    }
    Builder b;
    b.ext_pair(g, identity(g.n()), x, y, true);
    out.construction = finish(g, b, {{x, 2}, {y, 1}});
    return out;
}

ConstructOutcome construct_222_orientation(const Graph& g, VertexId x, VertexId y, VertexId z) {
    check_anchor_range(g, {x, y, z});
    require_k4_minor_free(g);
    ConstructOutcome out;
    if (!is_feasible_triple(g, x, y, z)) {
        out.reason = is_chain_connected(g, {x, y, z}) ? ImpossibleReason::Chained : ImpossibleReason::Infeasible;
        out.witness_lists = refutation_assignments(WitnessKind::TripleBoth, g.n(), {x, y, z});
        return out;
    }
    Builder b;
    b.ext_triple(g, identity(g.n()), x, y, z);
    out.construction = finish(g, b, {{x, 2}, {y, 2}, {z, 2}});
    return out;
}

Construction construct_221_trianglefree(const Graph& g, VertexId x, VertexId y, VertexId z) {
    check_anchor_range(g, {x, y, z});
    if (!is_triangle_free(g)) fail(ErrorCode::WrongClass, "graph has a triangle");
    require_k4_minor_free(g);
    Builder b;
    b.ext_221(g, identity(g.n()), x, y, z);
    return finish(g, b, {{x, 2}, {y, 2}, {z, 1}});
}

MadConstruction construct_mad_222(const Graph& g, VertexId x, VertexId y, VertexId z) {
    check_anchor_range(g, {x, y, z});
    if (max_average_degree(g) >= mad_threshold()) fail(ErrorCode::WrongClass, "maximum average degree is at least 14/5");
    MadConstruction result;
    auto sizes = triple_color_sizes(g, x, y, z);
    if (sizes == 0) fail(ErrorCode::NoColoring, "graph is not 3-colorable");
    if (sizes == 0b100 || sizes == 0b001) {
        result.outcome.reason = ImpossibleReason::Blocked;
        result.outcome.witness_lists = refutation_assignments(
            sizes == 0b100 ? WitnessKind::TripleSame : WitnessKind::TripleSpread, g.n(), {x, y, z});
        return result;
    }
    Builder b;
    b.ext_mad(g, identity(g.n()), x, y, z);
    result.largest_kernel = b.largest_kernel;
    result.outcome.construction = finish(g, b, {{x, 2}, {y, 2}, {z, 2}});
    return result;
}

bool verify_trace(const ConstructionTrace& trace, const ATCertificate& cert, std::string* diagnostic) {
    auto reject = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    const int n = cert.orientation.n();
    std::vector<Arc> running;
    std::set<std::pair<VertexId, VertexId>> used;
    std::int64_t current = 1;
    bool tracking = true;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        for (auto a : step.arcs) {
            if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
                return reject("step " + std::to_string(i) + " has an arc outside the vertex range");
            if (!used.insert({std::min(a.tail, a.head), std::max(a.tail, a.head)}).second)
                return reject("step " + std::to_string(i) + " orients an edge twice");
        }
        running.insert(running.end(), step.arcs.begin(), step.arcs.end());
        if (!tracking) continue;
        if (static_cast<int>(running.size()) > kTraceDiffLimit) {
            tracking = false;
            continue;
        }
        std::int64_t next = compute_diff(Orientation(n, running)).diff();
        bool preserving = step.tag == TraceTag::Peel2 || step.tag == TraceTag::Pendant ||
                          step.tag == TraceTag::Case1Triangle || step.tag == TraceTag::Case2Diamond;
        std::int64_t expected = preserving ? current : current * compute_diff(Orientation(n, step.arcs)).diff();
        if (next != expected)
            return reject("step " + std::to_string(i) + " (" + std::string(to_string(step.tag)) + ") changes diff from " +
                          std::to_string(current) + " to " + std::to_string(next) + ", expected " + std::to_string(expected));
        current = next;
    }
    auto normalize = [](std::vector<Arc> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (normalize(running) != normalize(cert.orientation.arcs())) return reject("replayed arcs differ from the certificate");
    if (tracking && current != cert.result.diff()) return reject("replayed diff differs from the certificate");
    return true;
}

} // namespace atx
