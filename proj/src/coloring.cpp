#include "atx/coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace atx {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

void ListAssignment::validate() const {
    for (const auto& l : lists) {
        if (l.empty()) fail(ErrorCode::InvalidInput, "empty list");
        for (int c : l)
            if (c < 1) fail(ErrorCode::InvalidInput, "colors must be positive");
    }
}

namespace {

void check_coloring_guard(const Graph& g, int k) {
    if (k < 1) fail(ErrorCode::InvalidParameter, "k must be positive");
    if (k > 30) fail(ErrorCode::InvalidParameter, "k above 30 is not supported");
    if (g.n() > 24) fail(ErrorCode::TooLarge, "coloring enumeration is limited to 24 vertices");
}

struct ColoringSearch {
    const Graph& g;
    int k;
    bool canonical;
    const std::function<bool(const Coloring&)>& visit;
    Coloring c;

    // Returns false once the visitor asks to stop.
    bool run(VertexId v, int max_used) {
        if (v == g.n()) return visit(c);
        int top = canonical ? std::min(k, max_used + 1) : k;
        for (int col = 1; col <= top; ++col) {
            bool ok = true;
            for (VertexId w : g.neighbors(v)) {
                if (w >= v) break;
                if (c[w] == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            c[v] = col;
            if (!run(v + 1, std::max(max_used, col))) return false;
        }
        c[v] = 0;
        return true;
    }
};

} // namespace

void for_each_proper_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit) {
    check_coloring_guard(g, k);
    ColoringSearch s{g, k, false, visit, Coloring(g.n(), 0)};
    s.run(0, 0);
}

std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int k) {
    std::vector<Coloring> out;
    for_each_proper_coloring(g, k, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::vector<Coloring> canonical_colorings(const Graph& g, int k) {
    check_coloring_guard(g, k);
    std::vector<Coloring> out;
    std::function<bool(const Coloring&)> visit = [&](const Coloring& c) {
        out.push_back(c);
        return true;
    };
    ColoringSearch s{g, k, true, visit, Coloring(g.n(), 0)};
    s.run(0, 0);
    return out;
}

std::optional<Coloring> find_L_coloring(const Graph& g, const ListAssignment& lists) {
    if (lists.n() != g.n()) fail(ErrorCode::InvalidParameter, "list assignment size differs from vertex count");
    Coloring c(g.n(), 0);
    std::function<bool(VertexId)> run = [&](VertexId v) {
        if (v == g.n()) return true;
        for (int col : lists[v]) {
            bool ok = true;
            for (VertexId w : g.neighbors(v)) {
                if (w >= v) break;
                if (c[w] == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            c[v] = col;
            if (run(v + 1)) return true;
        }
        c[v] = 0;
        return false;
    };
    if (run(0)) return c;
    return std::nullopt;
}

namespace {

using Tuple = std::vector<int>;
using State = std::vector<Tuple>;  // sorted, unique

// Search for a bad list assignment. Vertices are processed in a fixed order; the state
// after each step is the set of colorings of the processed vertices projected onto those
// that still have unprocessed neighbours. Colors are relabelled to a normal form so that
// equivalent states share one memo entry; real colors are tracked for the witness.
class ChoosabilitySearch {
public:
    ChoosabilitySearch(const Graph& g, const CapacityMap& f, std::vector<VertexId> order)
        : g_(g), f_(f), order_(std::move(order)), pos_(g.n(), -1), lists_(g.n()) {
        for (int i = 0; i < static_cast<int>(order_.size()); ++i) pos_[order_[i]] = i;
        const int steps = static_cast<int>(order_.size());
        frontier_.resize(steps + 1);
        for (int i = 0; i < steps; ++i) {
            for (int j = 0; j <= i; ++j) {
                VertexId w = order_[j];
                for (VertexId x : g_.neighbors(w))
                    if (pos_[x] > i) {
                        frontier_[i + 1].push_back(w);
                        break;
                    }
            }
        }
        memo_.resize(steps + 1);
    }

    // True when a bad assignment was found; lists() then holds it (real colors).
    bool run() { return step(0, State{Tuple{}}, {}); }
    const std::vector<std::vector<int>>& lists() const { return lists_; }

private:
    const Graph& g_;
    const CapacityMap& f_;
    std::vector<VertexId> order_;
    std::vector<int> pos_;
    std::vector<std::vector<VertexId>> frontier_;  // frontier_[i]: before processing order_[i]
    std::vector<std::unordered_set<std::string>> memo_;
    std::vector<std::vector<int>> lists_;
    int next_real_ = 1;

    static std::string key(const State& s, int width) {
        std::string k;
        k.reserve(s.size() * width + 1);
        k.push_back(static_cast<char>(width));
        for (const auto& t : s)
            for (int c : t) k.push_back(static_cast<char>(c));
        return k;
    }

    // Relabels colors to the order of first appearance, repeating until stable.
    static void normalize(State& s, std::vector<int>& real) {
        for (int round = 0; round < 4; ++round) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            std::map<int, int> relabel;
            for (const auto& t : s)
                for (int c : t) relabel.emplace(c, static_cast<int>(relabel.size()) + 1);
            bool identity = std::all_of(relabel.begin(), relabel.end(), [](auto& p) { return p.first == p.second; });
            std::vector<int> next_real(relabel.size() + 1, 0);
            for (auto [from, to] : relabel) next_real[to] = real[from];
            real = std::move(next_real);
            if (identity) return;
            for (auto& t : s)
                for (int& c : t) c = relabel[c];
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    bool step(int i, const State& s, std::vector<int> real) {
        const int steps = static_cast<int>(order_.size());
        if (i == steps) return false;  // s nonempty: every coloring survives
        const std::string k = key(s, static_cast<int>(frontier_[i].size()));
        if (memo_[i].count(k)) return false;

        const VertexId v = order_[i];
        const int size = f_[v];
        const auto& before = frontier_[i];
        const auto& after = frontier_[i + 1];
        std::vector<int> old_colors;
        for (const auto& t : s) old_colors.insert(old_colors.end(), t.begin(), t.end());
        std::sort(old_colors.begin(), old_colors.end());
        old_colors.erase(std::unique(old_colors.begin(), old_colors.end()), old_colors.end());
        const int top = old_colors.empty() ? 0 : old_colors.back();

        // Index maps: earlier neighbours of v inside the frontier tuple, and projection.
        std::vector<int> nbr_slots;
        for (int j = 0; j < static_cast<int>(before.size()); ++j)
            if (g_.adjacent(before[j], v)) nbr_slots.push_back(j);
        std::vector<int> keep;  // slot in `before`, or -1 for v itself
        for (VertexId w : after) {
            if (w == v) {
                keep.push_back(-1);
                continue;
            }
            keep.push_back(static_cast<int>(std::find(before.begin(), before.end(), w) - before.begin()));
        }

        const int n_old = static_cast<int>(old_colors.size());
        for (int take = std::min(size, n_old); take >= 0; --take) {
            std::vector<bool> pick(n_old, false);
            std::fill(pick.begin(), pick.begin() + take, true);
            do {
                std::vector<int> list;
                for (int j = 0; j < n_old; ++j)
                    if (pick[j]) list.push_back(old_colors[j]);
                for (int j = 1; j <= size - take; ++j) list.push_back(top + j);

                State next;
                for (const auto& t : s)
                    for (int c : list) {
                        bool ok = std::none_of(nbr_slots.begin(), nbr_slots.end(), [&](int j) { return t[j] == c; });
                        if (!ok) continue;
                        Tuple nt;
                        nt.reserve(keep.size());
                        for (int j : keep) nt.push_back(j < 0 ? c : t[j]);
                        next.push_back(std::move(nt));
                    }

                std::vector<int> ext(real);
                ext.resize(top + size - take + 1, 0);
                for (int j = 1; j <= size - take; ++j) ext[top + j] = next_real_ + j - 1;
                lists_[v].clear();
                for (int c : list) lists_[v].push_back(ext[c]);
                if (next.empty()) return true;

                const int saved_real = next_real_;
                next_real_ += size - take;
                normalize(next, ext);
                if (step(i + 1, next, std::move(ext))) return true;
                next_real_ = saved_real;
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        lists_[v].clear();
        memo_[i].insert(k);
        return false;
    }
};

ListAssignment normalize_witness(std::vector<std::vector<int>> lists) {
    std::map<int, int> relabel;
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        for (int c : l) relabel.emplace(c, static_cast<int>(relabel.size()) + 1);
    }
    for (auto& l : lists) {
        for (int& c : l) c = relabel[c];
        std::sort(l.begin(), l.end());
    }
    return ListAssignment{std::move(lists)};
}

} // namespace

ChoosabilityResult is_f_choosable(const Graph& g, const CapacityMap& f) {
    if (f.size() != g.n()) fail(ErrorCode::InvalidParameter, "capacity map size differs from vertex count");
    // Strip vertices that can always be colored last.
    std::vector<bool> alive(g.n(), true);
    std::vector<int> deg(g.n());
    for (VertexId v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < g.n(); ++v)
            if (alive[v] && f[v] > deg[v]) {
                alive[v] = false;
                for (VertexId w : g.neighbors(v)) --deg[w];
                changed = true;
            }
    }
    std::vector<VertexId> core;
    int total = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (alive[v]) {
            core.push_back(v);
            total += f[v];
        }
    if (core.empty()) return {};
    if (core.size() > 8 || total > 20)
        fail(ErrorCode::TooLarge, "choosability check is limited to 8 vertices and list total 20");

    std::vector<Edge> core_edges;
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) core_edges.push_back({u, v});
    Graph h = make_graph(g.n(), core_edges);

    // Breadth-first order keeps the frontier small.
    std::vector<VertexId> order;
    std::vector<bool> seen(g.n(), false);
    for (VertexId r : core) {
        if (seen[r]) continue;
        std::deque<VertexId> queue{r};
        seen[r] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (VertexId w : h.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }

    ChoosabilitySearch search(h, f, order);
    if (!search.run()) return {};
    auto lists = search.lists();
    int fresh = 1000;
    for (VertexId v = 0; v < g.n(); ++v)
        if (lists[v].empty())
            for (int j = 0; j < f[v]; ++j) lists[v].push_back(fresh++);
    return {false, normalize_witness(std::move(lists))};
}

CapacityMap extendability_capacity(int n, const std::vector<std::pair<VertexId, int>>& anchors) {
    std::vector<int> f(n, 3);
    std::set<VertexId> used;
    for (auto [v, a] : anchors) {
        if (v < 0 || v >= n) fail(ErrorCode::InvalidParameter, "anchor out of range");
        if (!used.insert(v).second) fail(ErrorCode::DuplicateVertex, "anchor repeated");
        if (a != 1 && a != 2) fail(ErrorCode::InvalidParameter, "anchor capacity must be 1 or 2");
        f[v] = a;
    }
    return CapacityMap(std::move(f));
}

bool has_unique_3_coloring(const Graph& g) {
    check_coloring_guard(g, 3);
    int count = 0;
    std::function<bool(const Coloring&)> visit = [&](const Coloring&) { return ++count < 2; };
    ColoringSearch s{g, 3, true, visit, Coloring(g.n(), 0)};
    s.run(0, 0);
    return count == 1;
}

WitnessKind parse_witness_kind(const std::string& s) {
    if (s == "pair-sink") return WitnessKind::PairSink;
    if (s == "triple-same") return WitnessKind::TripleSame;
    if (s == "triple-spread") return WitnessKind::TripleSpread;
    if (s == "triple-both") return WitnessKind::TripleBoth;
    fail(ErrorCode::InvalidParameter, "unknown witness kind '" + s + "'");
}

std::vector<ListAssignment> refutation_assignments(WitnessKind kind, int n, const std::vector<VertexId>& vertices) {
    const std::size_t arity = kind == WitnessKind::PairSink ? 2 : 3;
    if (vertices.size() != arity) fail(ErrorCode::InvalidParameter, "wrong number of anchor vertices");
    std::set<VertexId> distinct(vertices.begin(), vertices.end());
    if (distinct.size() != arity) fail(ErrorCode::DuplicateVertex, "anchor repeated");
    for (VertexId v : vertices)
        if (v < 0 || v >= n) fail(ErrorCode::InvalidParameter, "anchor out of range");

    auto build = [&](const std::vector<std::vector<int>>& anchor_lists) {
        ListAssignment l{std::vector<std::vector<int>>(n, {1, 2, 3})};
        for (std::size_t i = 0; i < arity; ++i) l.lists[vertices[i]] = anchor_lists[i];
        return l;
    };
    switch (kind) {
    case WitnessKind::PairSink: return {build({{1, 2}, {3}})};
    case WitnessKind::TripleSame: return {build({{1, 2}, {1, 2}, {1, 2}})};
    case WitnessKind::TripleSpread: return {build({{1, 2}, {1, 3}, {2, 3}})};
    case WitnessKind::TripleBoth: return {build({{1, 2}, {1, 2}, {1, 2}}), build({{1, 2}, {1, 3}, {2, 3}})};
    }
    return {};
}

} // namespace atx
