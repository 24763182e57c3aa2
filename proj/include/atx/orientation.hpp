#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atx/graph.hpp"

namespace atx {

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    auto operator<=>(const Arc&) const = default;
    bool is_loop() const noexcept { return tail == head; }
};

// A direction for every edge instance of a (multi)graph on n vertices.
// Loops are permitted and contribute one to both out- and in-degree.
class Orientation {
public:
    Orientation() = default;
    Orientation(int n, std::vector<Arc> arcs);

    // Orientation of a simple graph; the arcs must cover every edge exactly once.
    // Arcs are stored in the graph's edge order. Throws InvalidInput otherwise.
    static Orientation of_graph(const Graph& g, std::span<const Arc> arcs);

    int n() const noexcept { return n_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    int out_degree(VertexId v) const { return out_[v]; }
    int in_degree(VertexId v) const { return in_[v]; }

    // True iff this orients exactly the edges of g.
    bool orients(const Graph& g) const;

    Orientation reversed() const;

    bool operator==(const Orientation& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_, in_;
};

// Per-vertex list sizes f; the out-degree cap at v is f(v) - 1.
class CapacityMap {
public:
    CapacityMap() = default;
    explicit CapacityMap(std::vector<int> values);
    static CapacityMap constant(int n, int value) { return CapacityMap(std::vector<int>(n, value)); }

    int size() const noexcept { return static_cast<int>(f_.size()); }
    int operator[](VertexId v) const { return f_[v]; }
    int out_cap(VertexId v) const { return f_[v] - 1; }
    const std::vector<int>& values() const noexcept { return f_; }
    int total() const;

    bool operator==(const CapacityMap&) const = default;

private:
    std::vector<int> f_;
};

struct DiffResult {
    std::uint64_t even = 0;  // |EE(D)|, includes the empty sub-digraph
    std::uint64_t odd = 0;   // |OE(D)|
    std::int64_t diff() const noexcept { return static_cast<std::int64_t>(even) - static_cast<std::int64_t>(odd); }
    bool operator==(const DiffResult&) const = default;
};

struct ATCertificate {
    Orientation orientation;
    CapacityMap caps;
    DiffResult result;
};

// Edge directions for a simple graph where some edges may still be undecided.
class PartialOrientation {
public:
    explicit PartialOrientation(const Graph& g);

    const Graph& graph() const noexcept { return *g_; }
    bool decided(int edge) const { return dir_[edge] >= 0; }
    // Sets edge {tail, head}; throws AlreadyDirected if it was set the other way.
    void set(VertexId tail, VertexId head);
    std::optional<Arc> arc(int edge) const;
    int undecided_at(VertexId v) const;
    bool complete() const;

    std::vector<Arc> arcs() const;
    Orientation to_orientation() const;  // requires complete()

private:
    const Graph* g_;
    std::vector<std::int8_t> dir_;  // -1 undecided, 0 low->high, 1 high->low
};

// Directs every undecided edge at v away from v (resp. towards v). Edges already pointing
// the requested way are left alone; an edge already pointing the other way throws AlreadyDirected.
void orient_rest_out(PartialOrientation& partial, VertexId v);
void orient_rest_in(PartialOrientation& partial, VertexId v);

} // namespace atx
