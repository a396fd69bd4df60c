/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/weight.hpp"

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cmc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;
    Weight w;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Immutable undirected simple graph with nonnegative rational weights.
///
/// Vertices are 0..n-1 and edge ids follow construction order. Every
/// edge is stored with u < v. Copies share the underlying storage, so
/// passing graphs by value is cheap.
class Graph {
public:
    Graph();
    /// Throws InvalidInput on self-loops, parallel edges, out-of-range
    /// endpoints or negative weights.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const noexcept;
    std::size_t m() const noexcept;

    const std::vector<Edge>& edges() const noexcept;
    const Edge& edge(EdgeId e) const;
    /// Incidences of v sorted by neighbor id.
    std::span<const Incidence> incident(Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    /// Total weight of edges incident on v.
    const Weight& weighted_degree(Vertex v) const;
    const Weight& total_weight() const noexcept;
    /// Number of edges with weight exactly one.
    std::size_t count_unit_edges() const noexcept;
    /// True when every weight is 0 or 1.
    bool is_zero_one() const noexcept;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// Subset of the vertices of a graph with n vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    /// Throws InvalidInput when a member is >= universe.
    VertexSet(std::size_t universe, std::span<const Vertex> members);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const noexcept {
        return v < bits_.size() && bits_[v] != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted member list.
    std::vector<Vertex> members() const;
    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.bits_ == b.bits_;
    }

private:
    std::vector<char> bits_;
    std::size_t count_ = 0;
};

/// A candidate answer: vertex set, its cut value and connectivity flag.
struct Solution {
    VertexSet vertices;
    Weight cut_value;
    bool connected = false;
};

/// Builds a Solution with recomputed cut value and connectivity flag.
Solution evaluate(const Graph& g, VertexSet s);

/// Rechecks every Solution invariant against g.
bool verify(const Graph& g, const Solution& s);

/// Total weight of edges with exactly one endpoint in s.
Weight cut_weight(const Graph& g, const VertexSet& s);

/// True iff s is nonempty and G[s] is connected. The empty set is
/// reported as disconnected.
bool is_connected_induced(const Graph& g, const VertexSet& s);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff g is connected, has n >= 3 and every vertex has degree two.
bool is_simple_cycle(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the parent vertex of local vertex i.
    std::vector<Vertex> to_parent;
};

/// Induced subgraph on `members` (any order); local ids follow the order
/// of `members`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// origin[v] lists the original vertices merged into contracted vertex v.
struct ContractionMap {
    std::vector<std::vector<Vertex>> origin;

    /// Union of origin[v] over v in s, as a set over the original graph.
    VertexSet lift(const VertexSet& s, std::size_t original_n) const;
};

struct Contraction {
    Graph graph;
    ContractionMap map;
};

/// Quotient graph with one vertex per part. Parallel edges are merged by
/// summing weights and self-loops dropped. Every part must be nonempty,
/// connected in g, and together the parts must partition V.
Contraction contract_vertex_sets(const Graph& g,
                                 const std::vector<std::vector<Vertex>>& parts);

/// Integer image of the weights: weight[e] == w(e) * denominator.
struct ScaledWeights {
    std::vector<std::int64_t> weight;
    BigInt denominator;

    Weight unscale(std::int64_t value) const;
};

/// Returns an integer scaling when the common denominator and the total
/// scaled weight both fit comfortably in 62 bits.
std::optional<ScaledWeights> scale_to_integers(const Graph& g);

} // namespace cmc
