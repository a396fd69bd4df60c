/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmc {

/// Algorithm names: bcmc, wcmc (epsilon), randomhalf (trials), bf,
/// tw, ptas (epsilon).
struct AlgorithmSpec {
    std::string name;
    std::optional<Weight> epsilon;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 0;

    std::string params() const;
};

struct SuiteInstance {
    FamilySpec family;
    std::vector<std::uint64_t> seeds;
};

struct Suite {
    std::vector<SuiteInstance> instances;
    std::vector<AlgorithmSpec> algorithms;
    bool oracle = false;
};

/// JSON suite:
///   {"instances": [{"family": "grid(3,3)", "seeds": [1, 2]}],
///    "algorithms": ["bcmc", {"name": "ptas", "epsilon": "1/2"}],
///    "oracle": true}
/// "seeds" defaults to [0]. Throws InvalidInput on malformed suites.
Suite parse_suite(std::string_view json_text);

struct ExperimentRecord {
    std::string id;
    std::string generator;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::string params;
    std::size_t n = 0;
    std::size_t m = 0;
    /// Empty when the run failed.
    std::optional<Weight> cut;
    std::optional<Weight> optimum;
    /// optimum / cut; present only with an optimum and a positive cut, or
    /// when both are zero (ratio 1).
    std::optional<Weight> ratio;
    double time_ms = 0;
    bool connected = false;
    bool verified = false;
    std::string error;
};

/// Runs every (instance, seed, algorithm) triple. Solutions are
/// re-verified before their cut is recorded; failures become records with
/// an error message. The optimum comes from brute force up to its size
/// limit and from the treewidth solver beyond it when the width allows.
/// Records are sorted by id.
std::vector<ExperimentRecord> run_bench(const Suite& suite);

/// The time column is the only nondeterministic field.
std::string records_csv(const std::vector<ExperimentRecord>& records);
std::string records_json(const std::vector<ExperimentRecord>& records);

} // namespace cmc
