/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmc {

/// rotation[v] lists the neighbors of v in cyclic order.
using Rotation = std::vector<std::vector<Vertex>>;

/// A dart is a directed copy (tail, head) of an undirected edge.
struct Dart {
    Vertex tail;
    Vertex head;
    friend bool operator==(const Dart&, const Dart&) = default;
};

/// Everything a graph file can carry.
///
/// Text format:
///   c <comment>
///   p cmc <n> <m>
///   e <u> <v> [<w>]          1-indexed labels, w decimal or p/q, default 1
///   rot <v> <u1> <u2> ...    optional rotation system (cyclic neighbor order)
///   outer <edge> <side>      optional outer face witness: the face on the
///                            dart u->v (side 0) or v->u (side 1) of the
///                            <edge>-th edge line (1-indexed)
struct GraphFile {
    Graph graph;
    /// labels[v] is the external label of dense vertex v.
    std::vector<std::uint64_t> labels;
    std::optional<Rotation> rotation;
    std::optional<Dart> outer;
};

/// Labels within 1..n map to label-1; any label above n triggers a dense
/// remap in increasing label order. Throws InvalidInput on malformed text.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

/// Identity labels 1..n.
std::vector<std::uint64_t> default_labels(std::size_t n);

std::string write_graph(const GraphFile& file);
std::string write_graph(const Graph& g);

} // namespace cmc
