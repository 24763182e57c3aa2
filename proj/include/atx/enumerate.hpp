#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "atx/graph.hpp"

namespace atx {

// Isomorphism-invariant fingerprint from equitable colour refinement.
std::string refinement_invariant(const Graph& g);

// Individualise-and-refine isomorphism test for graphs on at most 64 vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

// Keeps one representative per isomorphism class.
class IsoClassSet {
public:
    // Returns true if g was new.
    bool insert(const Graph& g);
    const std::vector<Graph>& graphs() const noexcept { return graphs_; }

private:
    std::unordered_map<std::string, std::vector<int>> buckets_;
    std::vector<Graph> graphs_;
};

struct EnumerationOptions {
    int max_vertices = 0;
    int min_vertices = 1;
    bool connected_only = false;
    // Must be closed under taking induced subgraphs: generation prunes with it.
    std::function<bool(const Graph&)> hereditary;
};

// All graphs up to isomorphism with min_vertices <= n <= max_vertices satisfying the predicate,
// built by vertex augmentation with isomorph rejection. Deterministic order: by n, then m,
// then graph6 string.
std::vector<Graph> enumerate_graphs(const EnumerationOptions& options);
// Same generation, one level at a time; stops when visit returns false.
void enumerate_levels(const EnumerationOptions& options,
                      const std::function<bool(int n, const std::vector<Graph>& level)>& visit);

// 2-trees: K2, then repeatedly add a vertex adjacent to both ends of an existing edge.
std::vector<Graph> enumerate_two_trees(int max_vertices);

} // namespace atx
