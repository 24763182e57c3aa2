#include "atx/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace atx {

Orientation::Orientation(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)), out_(n, 0), in_(n, 0) {
    for (auto a : arcs_) {
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
            fail(ErrorCode::InvalidInput, "arc endpoint out of range");
        ++out_[a.tail];
        ++in_[a.head];
    }
}

Orientation Orientation::of_graph(const Graph& g, std::span<const Arc> arcs) {
    if (static_cast<int>(arcs.size()) != g.m())
        fail(ErrorCode::InvalidInput, "orientation has " + std::to_string(arcs.size()) + " arcs for " +
                                          std::to_string(g.m()) + " edges");
    std::vector<Arc> ordered(g.m());
    std::vector<bool> seen(g.m(), false);
    for (auto a : arcs) {
        if (a.tail < 0 || a.head < 0 || a.tail >= g.n() || a.head >= g.n())
            fail(ErrorCode::InvalidInput, "arc endpoint out of range");
        auto idx = g.edge_index(a.tail, a.head);
        if (!idx) fail(ErrorCode::InvalidInput, "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") is not an edge");
        if (seen[*idx]) fail(ErrorCode::InvalidInput, "edge oriented twice");
        seen[*idx] = true;
        ordered[*idx] = a;
    }
    return Orientation(g.n(), std::move(ordered));
}

bool Orientation::orients(const Graph& g) const {
    if (n_ != g.n() || static_cast<int>(arcs_.size()) != g.m()) return false;
    std::vector<bool> seen(g.m(), false);
    for (auto a : arcs_) {
        auto idx = g.edge_index(a.tail, a.head);
        if (!idx || seen[*idx]) return false;
        seen[*idx] = true;
    }
    return true;
}

Orientation Orientation::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (auto a : arcs_) rev.push_back({a.head, a.tail});
    return Orientation(n_, std::move(rev));
}

CapacityMap::CapacityMap(std::vector<int> values) : f_(std::move(values)) {
    for (int x : f_)
        if (x < 1) fail(ErrorCode::InvalidParameter, "capacities must be positive");
}

int CapacityMap::total() const { return std::accumulate(f_.begin(), f_.end(), 0); }

PartialOrientation::PartialOrientation(const Graph& g) : g_(&g), dir_(g.m(), -1) {}

void PartialOrientation::set(VertexId tail, VertexId head) {
    auto idx = g_->edge_index(tail, head);
    if (!idx) fail(ErrorCode::InvalidInput, "not an edge");
    std::int8_t want = tail < head ? 0 : 1;
    if (dir_[*idx] >= 0 && dir_[*idx] != want)
        fail(ErrorCode::AlreadyDirected, "edge {" + std::to_string(tail) + "," + std::to_string(head) + "} already directed");
    dir_[*idx] = want;
}

std::optional<Arc> PartialOrientation::arc(int edge) const {
    if (dir_[edge] < 0) return std::nullopt;
    Edge e = g_->edges()[edge];
    return dir_[edge] == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

int PartialOrientation::undecided_at(VertexId v) const {
    int count = 0;
    for (VertexId w : g_->neighbors(v))
        if (dir_[*g_->edge_index(v, w)] < 0) ++count;
    return count;
}

bool PartialOrientation::complete() const {
    return std::all_of(dir_.begin(), dir_.end(), [](std::int8_t d) { return d >= 0; });
}

std::vector<Arc> PartialOrientation::arcs() const {
    std::vector<Arc> out;
    for (int e = 0; e < g_->m(); ++e)
        if (auto a = arc(e)) out.push_back(*a);
    return out;
}

Orientation PartialOrientation::to_orientation() const {
    if (!complete()) fail(ErrorCode::InvalidInput, "partial orientation is incomplete");
    return Orientation::of_graph(*g_, arcs());
}

void orient_rest_out(PartialOrientation& partial, VertexId v) {
    for (VertexId w : partial.graph().neighbors(v)) partial.set(v, w);
}

void orient_rest_in(PartialOrientation& partial, VertexId v) {
    for (VertexId w : partial.graph().neighbors(v)) partial.set(w, v);
}

} // namespace atx
