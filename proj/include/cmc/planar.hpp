/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/exact.hpp"
#include "cmc/graph.hpp"
#include "cmc/graph_io.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cmc {

/// Faces of a rotation system. The successor of dart u->v is v->w where w
/// follows u in the rotation of v.
struct Embedding {
    Graph graph;
    Rotation rotation;
    /// Darts of each face in traversal order; an isolated vertex owns one
    /// face without darts.
    std::vector<std::vector<Dart>> faces;
    /// Vertices on each face boundary, sorted.
    std::vector<std::vector<Vertex>> face_vertices;
    /// Per edge: face left of dart u->v and of dart v->u (u < v).
    std::vector<std::array<std::size_t, 2>> edge_faces;
    std::size_t outer_face = 0;
};

/// Throws InvalidInput when the rotation does not list each neighbor once
/// or Euler's formula fails on some component.
Embedding trace_faces(const Graph& g, const Rotation& rotation,
                      const std::optional<Dart>& outer = std::nullopt);

struct ColoringCheck {
    bool passed = true;
    std::size_t violations = 0;
    /// First offending pair of touching edges, if any.
    std::optional<std::pair<EdgeId, EdgeId>> witness;
};

struct EdgeColoring {
    std::size_t k = 0;
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> levels;
    /// Breadth-first level of each face in the vertex-face graph.
    std::vector<std::size_t> face_levels;
    ColoringCheck check;
};

/// Edge level = smaller level of its two faces; class = level mod k. Every
/// component is searched from its outer (or largest) face.
EdgeColoring radial_coloring(const Embedding& emb, std::size_t k);

/// Touching edges must have classes at cyclic distance at most one.
ColoringCheck validate_coloring(const Graph& g, const EdgeColoring& c);

Contraction contract_color_class(const Graph& g, const EdgeColoring& c, std::size_t class_id);

struct PtasGroup {
    std::size_t index = 0;
    std::size_t contracted_class = 0;
    std::size_t contracted_n = 0;
    std::size_t contracted_m = 0;
    std::size_t width = 0;
    bool solved = false;
    Weight dp_value;
    Weight lifted_value;
};

struct PtasResult {
    Solution solution;
    std::size_t k = 0;
    Weight epsilon;
    std::vector<PtasGroup> groups;
    ColoringCheck coloring;
    /// False when the coloring check failed or every group was skipped and
    /// the weighted approximation answered instead.
    bool exact_guarantee = true;
};

/// Groups j = 0..k/3-1 cover classes 3j, 3j+1, 3j+2; each contracts its
/// middle class 3j+1, solves the contraction exactly and lifts the answer.
/// epsilon above 1 is treated as 1; k = max(3, 3 ceil(1/epsilon)).
PtasResult ptas_solve(const Graph& g, const Embedding& emb, const Weight& epsilon);

std::string ptas_report_json(const PtasResult& r);

} // namespace cmc
