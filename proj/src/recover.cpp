#include <algorithm>

#include "atx/construct.hpp"

namespace atx {

namespace {

void check_reversed(const MultiGraph& h, std::span<const std::uint8_t> reversed) {
    if (reversed.size() != h.instances.size())
        fail(ErrorCode::InvalidParameter, "one direction bit per edge instance is required");
}

} // namespace

Orientation multigraph_orientation(const MultiGraph& h, std::span<const std::uint8_t> reversed) {
    check_reversed(h, reversed);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < h.instances.size(); ++i) {
        const auto& e = h.instances[i];
        arcs.push_back(reversed[i] ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    return Orientation(h.n, std::move(arcs));
}

Orientation recover_orientation(const MultiGraph& h, std::span<const std::uint8_t> reversed, int source_n) {
    check_reversed(h, reversed);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < h.instances.size(); ++i) {
        const auto& e = h.instances[i];
        if (e.u < 0 || e.v >= h.n || e.u >= h.n || e.v < 0) fail(ErrorCode::InvalidBackMap, "instance endpoint out of range");
        const VertexId su = h.source.at(e.u), sv = h.source.at(e.v);
        if (e.path.empty()) {
            if (e.is_loop()) fail(ErrorCode::InvalidBackMap, "loop without a backing cycle");
            arcs.push_back(reversed[i] ? Arc{sv, su} : Arc{su, sv});
            continue;
        }
        if (e.path.front() != su || e.path.back() != sv)
            fail(ErrorCode::InvalidBackMap, "backing path does not match the instance endpoints");
        std::vector<VertexId> walk(e.path);
        if (reversed[i]) std::reverse(walk.begin(), walk.end());
        const std::size_t k = walk.size();
        if (!e.is_loop()) {
            for (std::size_t j = 0; j + 1 < k; ++j) arcs.push_back({walk[j], walk[j + 1]});
            continue;
        }
        if (k < 4) fail(ErrorCode::InvalidBackMap, "backing cycle of a loop needs at least two interior vertices");
        // v1 = vk = u: (u, v_{k-1}) and (v_i, v_{i+1}) for i <= k-2.
        arcs.push_back({walk[0], walk[k - 2]});
        for (std::size_t j = 0; j + 2 < k; ++j) arcs.push_back({walk[j], walk[j + 1]});
    }
    for (auto a : arcs)
        if (a.tail >= source_n || a.head >= source_n) fail(ErrorCode::InvalidBackMap, "backing path leaves the source graph");
    return Orientation(source_n, std::move(arcs));
}

} // namespace atx
