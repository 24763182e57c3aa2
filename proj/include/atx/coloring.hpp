#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atx/orientation.hpp"

namespace atx {

// colorOf[v] in [k], colors start at 1.
using Coloring = std::vector<int>;

bool is_proper_coloring(const Graph& g, const Coloring& c);

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // sorted, nonempty

    int n() const { return static_cast<int>(lists.size()); }
    const std::vector<int>& operator[](VertexId v) const { return lists[v]; }
    // Throws InvalidInput unless every list is nonempty with positive entries.
    void validate() const;
    bool operator==(const ListAssignment&) const = default;
};

// Calls visit on every proper coloring with colors in [k], in lexicographic order,
// until visit returns false. Throws TooLarge beyond 24 vertices.
void for_each_proper_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit);
std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int k);

// One coloring per orbit under color renaming: vertex v may use a new color only
// if it is the smallest unused one.
std::vector<Coloring> canonical_colorings(const Graph& g, int k);

std::optional<Coloring> find_L_coloring(const Graph& g, const ListAssignment& lists);

struct ChoosabilityResult {
    bool choosable = true;
    std::optional<ListAssignment> witness;  // set iff !choosable
};

// Exact f-choosability. Vertices with f(v) > deg(v) are stripped repeatedly first; the
// size guard (8 vertices, sum f <= 20) applies to what remains. Throws TooLarge.
ChoosabilityResult is_f_choosable(const Graph& g, const CapacityMap& f);

// f = a_i at the anchors, 3 elsewhere.
CapacityMap extendability_capacity(int n, const std::vector<std::pair<VertexId, int>>& anchors);

bool has_unique_3_coloring(const Graph& g);

enum class WitnessKind { PairSink, TripleSame, TripleSpread, TripleBoth };
WitnessKind parse_witness_kind(const std::string& s);

// The fixed assignments used to refute list extendability: for PairSink on (x,y)
// L(x)={1,2}, L(y)={3}; for TripleSame all anchors {1,2}; for TripleSpread {1,2},{1,3},{2,3}.
// Every other vertex gets {1,2,3}. TripleBoth returns both triple assignments.
std::vector<ListAssignment> refutation_assignments(WitnessKind kind, int n, const std::vector<VertexId>& vertices);

} // namespace atx
