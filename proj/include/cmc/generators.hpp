/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include "cmc/graph_io.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmc {

/// A family name with positional arguments, written `grid(3,4)` or
/// `gnp(6,1/2)`. A bare name means no arguments.
struct FamilySpec {
    std::string family;
    std::vector<Weight> args;

    std::string str() const;
};

FamilySpec parse_family_spec(std::string_view text);

/// Families and their arguments:
///   path(n) cycle(n) clique(n) star(n)        unit weights, n vertices
///   gnp(n,p)                                  G(n,p), unit weights
///   grid(r,c)                                 with rotation system
///   hypercube(d)                              2^d vertices
///   subdivided(n,p,s)                         connected base graph, each edge
///                                             replaced by a path of up to s
///                                             extra vertices, {0,1} weights
///   zero-one(n,p) weighted(n,p)               connected, random weights
///   outerplanar(n,c)                          n-cycle plus up to c
///                                             noncrossing chords, with rotation
/// The result is a pure function of (spec, seed). Throws InvalidInput on
/// unknown families or bad arguments.
GraphFile generate_instance(const FamilySpec& spec, std::uint64_t seed);

std::vector<std::string> generator_families();

} // namespace cmc
