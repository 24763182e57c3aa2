#include "atx/diff.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace atx {

namespace {

struct DiffSearch {
    std::vector<Arc> arcs;
    std::vector<int> imbalance;  // out - in within the chosen subset
    std::vector<int> remaining;  // undecided arcs still touching each vertex
    std::uint64_t counts[2] = {0, 0};

    bool bounded(VertexId v) const { return std::abs(imbalance[v]) <= remaining[v]; }

    void run(std::size_t i, int parity) {
        if (i == arcs.size()) {
            ++counts[parity];
            return;
        }
        const auto [t, h] = arcs[i];
        --remaining[t];
        --remaining[h];
        if (bounded(t) && bounded(h)) run(i + 1, parity);
        ++imbalance[t];
        --imbalance[h];
        if (bounded(t) && bounded(h)) run(i + 1, parity ^ 1);
        --imbalance[t];
        ++imbalance[h];
        ++remaining[t];
        ++remaining[h];
    }
};

DiffResult count_with_order(const Orientation& d, std::span<const int> order) {
    DiffSearch search;
    search.imbalance.assign(d.n(), 0);
    search.remaining.assign(d.n(), 0);
    int loops = 0;
    for (auto a : d.arcs()) loops += a.is_loop();
    for (int idx : order) {
        Arc a = d.arcs().at(idx);
        if (a.is_loop()) fail(ErrorCode::InvalidParameter, "processing order must exclude loops");
        search.arcs.push_back(a);
        ++search.remaining[a.tail];
        ++search.remaining[a.head];
    }
    if (static_cast<int>(search.arcs.size()) + loops != static_cast<int>(d.arcs().size()))
        fail(ErrorCode::InvalidParameter, "processing order must list every non-loop arc once");
    search.run(0, 0);
    DiffResult r{search.counts[0], search.counts[1]};
    // A loop is balanced on its own: including it or not flips parity.
    for (int i = 0; i < loops; ++i) r = {r.even + r.odd, r.odd + r.even};
    return r;
}

} // namespace

DiffResult compute_diff(const Orientation& d) {
    std::vector<int> degree(d.n(), 0);
    for (auto a : d.arcs()) {
        ++degree[a.tail];
        ++degree[a.head];
    }
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(d.arcs().size()); ++i)
        if (!d.arcs()[i].is_loop()) order.push_back(i);
    auto key = [&](int i) { return std::min(degree[d.arcs()[i].tail], degree[d.arcs()[i].head]); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });
    return count_with_order(d, order);
}

DiffResult compute_diff(const Orientation& d, std::span<const int> order) {
    std::vector<int> check(order.begin(), order.end());
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        fail(ErrorCode::InvalidParameter, "processing order repeats an arc");
    return count_with_order(d, order);
}

std::int64_t coefficient_oracle(const Orientation& d) {
    const int n = d.n();
    std::vector<Edge> edges;
    for (auto a : d.arcs()) {
        if (a.is_loop()) fail(ErrorCode::InvalidInput, "coefficient oracle needs a simple graph");
        edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    Graph g = make_graph(n, edges);  // rejects parallel arcs

    std::vector<int> target(n), left(n);
    for (VertexId v = 0; v < n; ++v) {
        target[v] = d.out_degree(v);
        left[v] = g.degree(v);
    }
    const int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(g.max_degree()))));
    if (bits * n > 64) fail(ErrorCode::TooLarge, "monomial key does not fit 64 bits");
    auto exponent = [&](std::uint64_t key, VertexId v) { return static_cast<int>((key >> (bits * v)) & ((1ULL << bits) - 1)); };

    std::unordered_map<std::uint64_t, std::int64_t> poly{{0, 1}}, next;
    for (auto [u, v] : g.edges()) {
        --left[u];
        --left[v];
        next.clear();
        for (auto [key, coef] : poly) {
            // x_u term keeps the sign, x_v term flips it; drop monomials that overshoot or
            // can no longer reach the target exponent.
            for (int side = 0; side < 2; ++side) {
                VertexId raised = side == 0 ? u : v, other = side == 0 ? v : u;
                int er = exponent(key, raised) + 1, eo = exponent(key, other);
                if (er > target[raised] || er + left[raised] < target[raised]) continue;
                if (eo + left[other] < target[other]) continue;
                std::int64_t c = side == 0 ? coef : -coef;
                std::uint64_t k = key + (1ULL << (bits * raised));
                next[k] += c;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        std::swap(poly, next);
    }
    std::uint64_t want = 0;
    for (VertexId v = 0; v < n; ++v) want |= static_cast<std::uint64_t>(target[v]) << (bits * v);
    auto it = poly.find(want);
    return it == poly.end() ? 0 : std::llabs(it->second);
}

} // namespace atx
