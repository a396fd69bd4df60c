/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

/// Error categories; the numeric values double as CLI exit codes.
enum class ErrorCode : int {
    invalid_input = 1,
    size_guard = 2,
    invariant_violation = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what)
        : Error(ErrorCode::invalid_input, what) {}
};

class SizeGuardError : public Error {
public:
    explicit SizeGuardError(const std::string& what)
        : Error(ErrorCode::size_guard, what) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error(ErrorCode::invariant_violation, what) {}
};

/// Raised by contract_d2_paths when handed a simple cycle; callers should
/// route such components to cycle_solve instead.
class CycleInput : public InvalidInput {
public:
    explicit CycleInput(const std::string& what) : InvalidInput(what) {}
};

} // namespace cmc
