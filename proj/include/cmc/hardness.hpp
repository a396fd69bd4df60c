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

/// Planar monotone 3-SAT. Variables are 1..n in their left-to-right order;
/// every clause lists one to three variable indices and is wholly positive
/// or wholly negative by the list it sits in.
struct PM3Sat {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> positive;
    std::vector<std::vector<std::size_t>> negative;

    std::size_t m() const { return positive.size() + negative.size(); }
};

struct PM3SatViolation {
    bool positive_side;
    std::size_t first;
    std::size_t second;
    std::string reason;
};

struct PM3SatReport {
    bool valid = true;
    std::vector<PM3SatViolation> violations;
};

/// Checks index ranges, clause sizes and that the clause intervals
/// [min, max] on each side are nested or disjoint. Intervals that only
/// share an endpoint count as disjoint. Size and range problems report
/// first == second.
PM3SatReport validate_pm3sat(const PM3Sat& inst);

/// Text format: `p pmsat <n> <m>`, then `cp v1 [v2 [v3]]` and
/// `cn v1 [v2 [v3]]` lines; `c` lines are comments.
PM3Sat parse_pm3sat(std::string_view text);
std::string write_pm3sat(const PM3Sat& inst);

enum class GadgetRole : std::uint8_t {
    pos_literal,
    neg_literal,
    helper,
    helper_leaf,
    clause,
    clause_leaf,
};

/// Variable, helper and clause indices are 0-based here.
struct VertexRole {
    GadgetRole kind;
    std::uint32_t var = 0;
    std::uint32_t helper = 0;
    std::uint32_t clause = 0;
    std::uint32_t leaf = 0;
};

/// Layout: literal pairs (x_i, not x_i), helpers variable by variable,
/// helper leaves, clause vertices (positive clauses first), clause leaves.
struct Gadget {
    PM3Sat source;
    Graph graph;
    std::uint64_t K = 0;
    std::uint64_t sqrt_K = 0;
    std::uint64_t threshold = 0;

    Vertex literal(std::size_t var, bool value) const;
    Vertex helper(std::size_t var, std::size_t k) const;
    Vertex clause(std::size_t j) const;
    /// Clause j over the concatenation positive ++ negative.
    const std::vector<std::size_t>& clause_vars(std::size_t j) const;
    bool clause_positive(std::size_t j) const;
    VertexRole role(Vertex v) const;
    std::string role_name(Vertex v) const;
};

/// K = (m+1)^2 and threshold = m sqrt(K) + nK + nK^2. Repeated variables
/// inside one clause become a single edge. Throws InvalidInput on an
/// invalid instance and SizeGuardError past 2^25 vertices.
Gadget sat_to_cmc(const PM3Sat& inst);

/// {K, threshold, roles} with one role name per vertex.
std::string gadget_sidecar_json(const Gadget& gdt);

struct ForwardResult {
    std::optional<Solution> solution;
    /// Clauses (0-based, positive first) without a true literal.
    std::vector<std::size_t> unsatisfied;
};

/// assignment[i] is the value of variable i+1. Builds true literals, all
/// clause vertices and all helpers when every clause is satisfied, and
/// reports the unsatisfied clauses otherwise.
ForwardResult assignment_to_solution(const Gadget& gdt, const std::vector<bool>& assignment);

struct OracleResult {
    std::uint64_t value = 0;
    std::vector<bool> assignment;
    Solution solution;
};

/// Maximum true cut over assignment-shaped sets: helpers, one literal per
/// variable and the clause vertices that literal choice reaches. n <= 20.
OracleResult structured_opt_oracle(const Gadget& gdt);

} // namespace cmc
