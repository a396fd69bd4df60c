/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/graph.hpp"

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cmc {

// Both rewrites operate on {0,1}-weighted graphs. Step records use "stable"
// vertex ids: ids below the stage input's n are input vertices, larger ids
// are vertices created by the stage. Nothing is ever renumbered inside a
// stage; the stage output is compacted once at the end.

/// Vertex with only 0-edges deleted; its non-adjacent neighbor pairs were
/// joined by new 0-edges.
struct ZeroVertexRemoval {
    Vertex vertex;
    std::vector<Vertex> neighbors;
    std::vector<std::pair<Vertex, Vertex>> added_edges;
};

/// path = v0, v1, v2, v3 with v1, v2, v3 of degree two and deg(v0) != 2.
/// v1, v2 and their three path edges are replaced by `merged` with edges
/// v0-merged (new_weights[0]) and merged-v3 (new_weights[1]).
struct D2Contraction {
    std::array<Vertex, 4> path;
    std::array<int, 3> path_weights;
    Vertex merged;
    std::array<int, 2> new_weights;
    /// Number of 1-edges on the path, capped at 2.
    int ones;
};

using ReductionStep = std::variant<ZeroVertexRemoval, D2Contraction>;

struct ReductionStage {
    Graph input;
    std::vector<ReductionStep> steps;
    std::size_t stable_n = 0;
    Graph output;
    /// output vertex i corresponds to stable id output_to_stable[i].
    std::vector<Vertex> output_to_stable;
};

/// Ordered log of reversible rewrites. Stages are applied front to back
/// and lifted back to front.
class ReductionTrace {
public:
    ReductionTrace() = default;
    explicit ReductionTrace(ReductionStage stage);

    const std::vector<ReductionStage>& stages() const noexcept { return stages_; }
    /// Number of recorded steps over all stages.
    std::size_t step_count() const noexcept;
    bool empty() const noexcept { return step_count() == 0; }

    /// Appends `next`, whose first input must be this trace's output.
    void append(ReductionTrace next);

private:
    std::vector<ReductionStage> stages_;
};

struct Reduced {
    Graph graph;
    ReductionTrace trace;
};

/// Deletes every vertex without an incident 1-edge, joining its neighbors
/// with 0-edges. May return the empty graph when no 1-edge exists.
/// Throws InvalidInput if any weight is outside {0,1}.
Reduced ensure_one_edges(const Graph& g);

/// Repeatedly replaces d-2 paths of length three, lowest anchor first.
/// Requires a connected graph that is not a simple cycle; cycles raise
/// CycleInput.
Reduced contract_d2_paths(const Graph& g);

/// As contract_d2_paths but on any {0,1} graph: components that are
/// simple cycles are left untouched.
Reduced contract_d2_paths_per_component(const Graph& g);

/// True when no vertex of degree two has two neighbors of degree two.
bool has_no_long_d2_paths(const Graph& g);

/// Maps a connected solution of the reduced graph back to the original
/// graph. The result is connected and its cut is never smaller. For an
/// empty reduced graph pass an empty set; the lowest original vertex is
/// returned. A trace without stages returns s unchanged (Solution form
/// only). Throws InvariantViolation on a trace/solution mismatch.
Solution lift_solution(const ReductionTrace& trace, const Solution& s);
Solution lift_solution(const ReductionTrace& trace, const VertexSet& s);

/// Replays every stage forward from its input and returns the final graph.
Graph replay(const ReductionTrace& trace);

/// Debug dump: {"stages":[{"input_n":..,"output_n":..,"steps":[...]}]}.
std::string trace_to_json(const ReductionTrace& trace);

} // namespace cmc
