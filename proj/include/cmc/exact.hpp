/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmc {

inline constexpr std::size_t kBruteForceLimit = 24;
inline constexpr std::size_t kDpWidthLimit = 12;

/// Exact optimum by growing every connected vertex set once. Ties go to the
/// lexicographically smallest sorted member list. Refuses n > 24 with
/// SizeGuardError unless `force`; n > 64 is never accepted.
Solution brute_force_cmc(const Graph& g, bool force = false);

struct TreeDecomposition {
    /// Sorted vertex lists.
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    /// Largest bag size minus one; 0 for an empty decomposition.
    std::size_t width() const;
};

/// One bag holding every vertex.
TreeDecomposition trivial_decomposition(const Graph& g);

/// Min-fill elimination ordering, ties by degree then vertex id.
TreeDecomposition build_decomposition(const Graph& g);

struct DecompositionCheck {
    bool valid = false;
    /// Empty when valid; otherwise names the first violated property and a
    /// witness vertex, edge or tree defect.
    std::string witness;
};

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// PACE .td text. Vertex numbers are graph labels (1..n by default).
TreeDecomposition parse_td(std::string_view text, const std::vector<std::uint64_t>& labels);
std::string write_td(const TreeDecomposition& td, const std::vector<std::uint64_t>& labels);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    /// Leaf, introduced or forgotten vertex; unused for joins.
    Vertex vertex = 0;
    /// Node ids; children always precede their parent.
    std::vector<std::size_t> children;
    std::vector<Vertex> bag;
};

struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    std::size_t root = 0;

    std::size_t width() const;
    /// Union of the bags in the subtree of `node`, sorted.
    std::vector<Vertex> cone(std::size_t node) const;
    /// Same bags and tree without node types.
    TreeDecomposition flatten() const;
};

/// Rooted at the first nonempty bag; empty bags are dropped first. Leaves
/// hold one vertex and the root keeps the full root bag. Throws
/// InvalidInput when td is not a valid decomposition of g.
NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Structural node checks plus validate_decomposition on the flattened tree.
DecompositionCheck validate_nice(const Graph& g, const NiceDecomposition& nd);

struct DpStats {
    std::size_t nodes = 0;
    std::size_t width = 0;
    std::size_t max_states = 0;
    std::size_t total_states = 0;
    /// Largest number of blocks in any reachable state.
    std::size_t max_blocks = 0;
    std::size_t max_bag = 0;
};

struct DpResult {
    Solution solution;
    DpStats stats;
};

/// Exact optimum over the nice decomposition. Throws SizeGuardError when
/// the width exceeds 12 and InvalidInput when nd does not fit g.
DpResult dp_solve(const Graph& g, const NiceDecomposition& nd);

/// build_decomposition (or `td` when given), make_nice and dp_solve.
DpResult treewidth_solve(const Graph& g, const std::optional<TreeDecomposition>& td = std::nullopt);

} // namespace cmc
