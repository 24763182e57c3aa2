#pragma once
// Slow reference implementations. They share nothing with the library beyond Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "atx/graph.hpp"
#include "atx/mad.hpp"
#include "atx/orientation.hpp"

namespace oracle {

using atx::Arc;
using atx::Graph;
using atx::VertexId;

// Every arc subset, checked for balance.
inline std::pair<std::uint64_t, std::uint64_t> eulerian_counts(int n, const std::vector<Arc>& arcs) {
    const int m = static_cast<int>(arcs.size());
    std::uint64_t even = 0, odd = 0;
    std::vector<int> bal(n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::fill(bal.begin(), bal.end(), 0);
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) {
                ++bal[arcs[i].tail];
                --bal[arcs[i].head];
            }
        if (std::all_of(bal.begin(), bal.end(), [](int b) { return b == 0; }))
            (__builtin_popcountll(s) % 2 ? odd : even)++;
    }
    return {even, odd};
}

inline atx::ExactRational mad(const Graph& g) {
    atx::ExactRational best(0);
    const int n = g.n();
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        long e = 0;
        for (const auto& ed : g.edges())
            if ((s >> ed.u & 1) && (s >> ed.v & 1)) ++e;
        atx::ExactRational d(2 * e, __builtin_popcount(s));
        if (d > best) best = d;
    }
    return best;
}

// Assign each vertex a label in 0..4 (4 = unused); look for four connected,
// pairwise adjacent branch sets.
inline bool has_k4_minor(const Graph& g) {
    const int n = g.n();
    if (n < 4) return false;
    std::vector<int> lab(n, 0);
    auto connected = [&](int l) {
        std::vector<int> mem;
        for (int v = 0; v < n; ++v)
            if (lab[v] == l) mem.push_back(v);
        if (mem.empty()) return false;
        std::vector<int> seen(n, 0), st{mem[0]};
        seen[mem[0]] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.neighbors(v))
                if (lab[w] == l && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    st.push_back(w);
                }
        }
        return cnt == static_cast<int>(mem.size());
    };
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            for (int l = 0; l < 4; ++l)
                if (!connected(l)) return false;
            bool adj[4][4] = {};
            for (const auto& e : g.edges()) {
                int a = lab[e.u], b = lab[e.v];
                if (a < 4 && b < 4 && a != b) adj[a][b] = adj[b][a] = true;
            }
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    if (!adj[a][b]) return false;
            return true;
        }
        // Symmetry break: label l may appear only after l-1 has.
        int top = -1;
        for (int u = 0; u < v; ++u)
            if (lab[u] < 4) top = std::max(top, lab[u]);
        for (int l = 0; l <= std::min(top + 1, 3); ++l) {
            lab[v] = l;
            if (rec(v + 1)) return true;
        }
        lab[v] = 4;
        return rec(v + 1);
    };
    return rec(0);
}

// Some homomorphism of the single diamond sends its hubs to (a, b).
inline bool diamond_maps(const Graph& g, VertexId a, VertexId b) {
    for (int p = 0; p < g.n(); ++p)
        for (int q = 0; q < g.n(); ++q)
            if (p != q && g.adjacent(p, q) && g.adjacent(a, p) && g.adjacent(a, q) && g.adjacent(b, p) &&
                g.adjacent(b, q))
                return true;
    return false;
}

// Homomorphism from some chain of diamonds whose hub image covers X: reachability over
// (current hub, covered subset of X) with at least one diamond used.
inline bool chain_connected(const Graph& g, const std::vector<VertexId>& x) {
    const int n = g.n(), k = static_cast<int>(x.size());
    auto bit = [&](VertexId v) {
        for (int i = 0; i < k; ++i)
            if (x[i] == v) return 1 << i;
        return 0;
    };
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> st;
    for (int h = 0; h < n; ++h)
        for (int h2 = 0; h2 < n; ++h2)
            if (diamond_maps(g, h, h2)) {
                std::pair<int, int> s{h2, bit(h) | bit(h2)};
                if (seen.insert(s).second) st.push_back(s);
            }
    while (!st.empty()) {
        auto [h, mask] = st.back();
        st.pop_back();
        if (mask == (1 << k) - 1) return true;
        for (int h2 = 0; h2 < n; ++h2)
            if (diamond_maps(g, h, h2)) {
                std::pair<int, int> s{h2, mask | bit(h2)};
                if (seen.insert(s).second) st.push_back(s);
            }
    }
    return false;
}

// Full product of the lists.
inline bool L_colorable(const Graph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.n();
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& e : g.edges())
            if (lists[e.u][idx[e.u]] == lists[e.v][idx[e.v]]) ok = false;
        if (ok) return true;
        int v = 0;
        while (v < n && ++idx[v] == lists[v].size()) idx[v++] = 0;
        if (v == n) return false;
    }
}

inline std::vector<std::vector<int>> all_3_colorings(const Graph& g) {
    std::vector<std::vector<int>> out;
    const int n = g.n();
    std::vector<int> c(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& e : g.edges())
            if (c[e.u] == c[e.v]) ok = false;
        if (ok) out.push_back(c);
        int v = 0;
        while (v < n && ++c[v] == 3) c[v++] = 0;
        if (v == n) return out;
    }
}

} // namespace oracle
