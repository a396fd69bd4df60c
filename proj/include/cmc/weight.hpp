/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cmc {

/// Exact nonnegative rational edge weight. All cut arithmetic is exact.
using Weight = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "0.25", "1e-3"-free decimals and "p/q" fractions.
/// Throws InvalidInput on malformed or negative values.
Weight parse_weight(std::string_view text);

/// Writes integers as "7", terminating decimals as "0.125", and anything
/// else as "p/q". parse_weight(format_weight(w)) == w for every w.
std::string format_weight(const Weight& w);

double to_double(const Weight& w);

} // namespace cmc
