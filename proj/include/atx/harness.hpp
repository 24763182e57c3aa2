#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "atx/construct.hpp"
#include "atx/serialize.hpp"

namespace atx {

enum class ClassFilter { K4mf, K4mfTriangleFree, Mad145, All };
ClassFilter parse_class_filter(const std::string& name);
std::string_view to_string(ClassFilter cls);

// Hereditary membership test for the class (mad145 means mad < 14/5).
bool in_class(const Graph& g, ClassFilter cls);

struct SweepConfig {
    int max_vertices = 6;
    int min_vertices = 1;
    ClassFilter cls = ClassFilter::K4mf;
    int arity = 2;
    int workers = 1;
    std::uint64_t seed = 0;
    int sample = 0;  // anchor tuples per graph; 0 means all ordered tuples
    bool structure = true;  // also run the structural property checks
};

struct GraphReport {
    std::string graph6;
    int n = 0, m = 0;
    long tuples = 0;
    long certificates = 0;     // re-verified certificates
    long witnesses = 0;        // re-verified non-extendability witnesses
    long flagged = 0;          // traces that took a fallback path
    long contract_violations = 0;
    int largest_kernel = 0;
    std::vector<std::string> counterexamples;

    Json to_json() const;
};

// Connected graphs of the class with min_vertices <= n <= max_vertices (max 10).
std::vector<Graph> generate_corpus(const SweepConfig& config);

// Every invariant for one graph; never throws for library errors (they become counterexamples).
GraphReport check_graph(const Graph& g, const SweepConfig& config, std::uint64_t index = 0);

// Structural properties: two non-adjacent 2-vertices, genuine 2-vertices when there are two or
// three 2-vertices, the coloring-to-feasibility implication, and the edge dichotomy.
std::vector<std::string> structure_counterexamples(const Graph& g);

// Independent checks used before anything is counted.
// Certificate: coverage of g, caps, per-vertex out-degree, diff recomputed and matched
// against the polynomial coefficient.
bool independent_certificate_check(const Graph& g, const ATCertificate& cert, std::string* why = nullptr);
// Brute force over the product of the lists.
bool brute_force_L_colorable(const Graph& g, const ListAssignment& lists);

struct SweepSummary {
    long graphs = 0;
    long tuples = 0;
    long certificates = 0;
    long witnesses = 0;
    long flagged = 0;
    long counterexamples = 0;
    long contract_violations = 0;
    int largest_kernel = 0;
    double seconds = 0;
};

// Checks each graph on a worker pool and writes one JSON line per graph in input order.
SweepSummary run_sweep(const std::vector<Graph>& graphs, const SweepConfig& config, std::ostream* out);

struct TightnessWitness {
    Graph graph;
    std::vector<VertexId> triple;
    ListAssignment lists;
    bool verified = false;  // brute force confirmed no L-coloring
};
struct TightnessSearch {
    std::optional<TightnessWitness> witness;
    long graphs_examined = 0;  // connected graphs with mad exactly 14/5
    long triples_examined = 0;
    long skipped_too_large = 0;
    int reached_vertices = 0;
};
// Scans connected graphs with mad exactly 14/5 by increasing order for a non-blocked triple
// that is not (2,2,2)-list extendable; stops at the first.
TightnessSearch search_tightness_witness(int max_vertices);

} // namespace atx
