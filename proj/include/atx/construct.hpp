#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atx/at_search.hpp"
#include "atx/coloring.hpp"
#include "atx/graph.hpp"

namespace atx {

enum class TraceTag { Peel2, Pendant, Case1Triangle, Case2Diamond, KernelSearch, CutvertexGlue, Recover, Base };
std::string_view to_string(TraceTag tag);

struct TraceStep {
    TraceTag tag;
    std::vector<VertexId> vertices;  // ids in the input graph
    std::vector<Arc> arcs;           // arcs this step adds
    std::string note;
};

// Steps in replay order: each step only adds arcs on top of the earlier ones.
struct ConstructionTrace {
    std::vector<TraceStep> steps;
    bool flagged() const;  // some step took a documented fallback path
};

struct Construction {
    ATCertificate certificate;
    ConstructionTrace trace;
};

enum class ImpossibleReason { Chained, Infeasible, Blocked };
std::string_view to_string(ImpossibleReason reason);

struct ConstructOutcome {
    std::optional<Construction> construction;
    std::optional<ImpossibleReason> reason;        // set iff construction is absent
    std::vector<ListAssignment> witness_lists;     // assignments refuting list extendability
    bool ok() const noexcept { return construction.has_value(); }
};

// (2,2)-AT orientation for a K4-minor-free graph. WrongClass / InvalidInput on bad input.
Construction construct_22_orientation(const Graph& g, VertexId x, VertexId y);
// (2,1)-AT orientation when {x,y} is not chain-connected; otherwise the witness lists.
ConstructOutcome construct_21_orientation(const Graph& g, VertexId x, VertexId y);
// (2,2,2)-AT orientation when {x,y,z} is feasible; otherwise the witness lists.
ConstructOutcome construct_222_orientation(const Graph& g, VertexId x, VertexId y, VertexId z);
// (2,2,1)-AT orientation for a triangle-free K4-minor-free graph.
Construction construct_221_trianglefree(const Graph& g, VertexId x, VertexId y, VertexId z);

// (2,2,2)-AT orientation for mad < 14/5 and a non-blocked triple.
struct MadConstruction {
    ConstructOutcome outcome;
    int largest_kernel = 0;  // vertex count of the largest non-K4-minor-free kernel met
};
MadConstruction construct_mad_222(const Graph& g, VertexId x, VertexId y, VertexId z);

// Arc-count limit under which verify_trace recomputes diffs.
inline constexpr int kTraceDiffLimit = 30;

// Replays the trace and checks it reproduces the certificate. Diff-preserving steps
// (peel2, pendant, case1-triangle, case2-diamond) must keep diff; the others must multiply
// it by the diff of their own arcs. Diffs are checked only up to kTraceDiffLimit arcs.
bool verify_trace(const ConstructionTrace& trace, const ATCertificate& cert, std::string* diagnostic = nullptr);

// Lifts an orientation of a contracted multigraph back to the source graph on source_n
// vertices. reversed[i] flips the traversal of instance i (from u to v when false).
// Each non-loop instance becomes a directed path; a loop over the closed walk v1..vk
// becomes (v1,v_{k-1}) plus (v_i,v_{i+1}) for i <= k-2. Throws InvalidBackMap when a
// path does not start and end at the instance's endpoints.
Orientation recover_orientation(const MultiGraph& h, std::span<const std::uint8_t> reversed, int source_n);
// The multigraph orientation itself (loops become (u,u) arcs).
Orientation multigraph_orientation(const MultiGraph& h, std::span<const std::uint8_t> reversed);

} // namespace atx
