/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/graph.hpp"

#include <cstdint>
#include <vector>

namespace cmc {

/// A subtree of `host` together with its leaf statistics.
///
/// leaves holds the tree-degree-one vertices; a single-vertex tree counts
/// its vertex as a leaf. leaf_weight is the sum of host weighted degrees
/// over the leaves and thickness = leaf_weight / (number of 1-edges of
/// host), or 0 when host has no 1-edge.
struct ThickTree {
    Graph host;
    std::vector<EdgeId> tree_edges;
    VertexSet vertices;
    VertexSet leaves;
    Weight leaf_weight;
    Weight thickness;
};

/// Builds a ThickTree from host edge ids, or from a single vertex when
/// tree_edges is empty. Throws InvalidInput if the edges are not a tree.
ThickTree make_thick_tree(const Graph& host, std::vector<EdgeId> tree_edges,
                          Vertex lone_vertex = 0);

/// Longest run of consecutive tree-degree-two vertices.
std::size_t longest_tree_d2_run(const ThickTree& t);

struct LeafBipartition {
    VertexSet part1;
    VertexSet part2;
    /// Weight of G[L] edges between the parts (the number of crossing
    /// 1-edges on {0,1} graphs).
    Weight crossing_ones;
};

/// Exact optimum on a simple cycle: the arc bounded by the two heaviest
/// edges. Throws InvalidInput for anything that is not a simple cycle.
Solution cycle_solve(const Graph& g);

/// Spanning tree with at least ceil(n/14) leaves and no run of seven
/// tree-degree-two vertices. Requires g connected, not a simple cycle and
/// free of d-2 paths of length three.
ThickTree leafy_spanning_tree(const Graph& g);

/// Deterministic local search from the even/odd id split; every vertex
/// ends with at least half of its G[L] weight crossing.
LeafBipartition leaf_bipartition(const Graph& g, const VertexSet& l);

/// The better of (tree minus part1) and (tree minus part2); cut value is
/// at least leaf_weight / 4.
Solution thick_tree_cut(const ThickTree& t);

struct BcmcReport {
    Solution best;
    /// True cut in g of every lifted candidate, in generation order.
    std::vector<Weight> candidate_cuts;
    std::size_t iterations = 0;
};

/// Full {0,1} pipeline: reductions, every peeling iteration's trees,
/// lifting, argmax of true cut. The pipeline is deterministic; `seed` is
/// accepted for interface symmetry with the sampling solvers.
Solution bcmc_approx(const Graph& g, std::uint64_t seed = 0);
BcmcReport bcmc_approx_report(const Graph& g, std::uint64_t seed = 0);

struct WeightClass {
    std::size_t index = 0;
    Weight lower;
    Weight upper;
    std::vector<EdgeId> edges;
    /// Same graph with weight 1 on class edges and 0 elsewhere.
    Graph binarized;
};

/// Classes [w0 (1+eps)^i, w0 (1+eps)^(i+1)) with w0 = eps * w_max / m, for
/// every i up to the class holding w_max. Edges lighter than w0 belong to
/// no class. Returns an empty list when every weight is zero.
std::vector<WeightClass> weight_class_split(const Graph& g, const Weight& eps);

/// Solves every nonempty class with bcmc_approx and keeps the best true
/// weighted cut.
Solution wcmc_approx(const Graph& g, const Weight& eps = Weight(1), std::uint64_t seed = 0);

struct RandomHalfStats {
    Solution best;
    std::size_t trials = 0;
    /// Samples that were nonempty and connected.
    std::size_t accepted = 0;
    Weight accepted_cut_sum;
};

/// Samples `trials` vertex sets with inclusion probability 1/2 and keeps
/// the best connected one, falling back to the best single vertex.
Solution random_half_cmc(const Graph& g, std::size_t trials, std::uint64_t seed);
RandomHalfStats random_half_sample(const Graph& g, std::size_t trials, std::uint64_t seed);

} // namespace cmc
