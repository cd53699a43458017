// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramseylab {

using Nat = std::uint32_t;
using NatSet = std::set<Nat>;
using Color = std::uint8_t;

/// Unordered pair {first, second}, stored with first < second.
struct Pair {
    Nat first{0};
    Nat second{0};

    static Pair of(Nat x, Nat y) { return x < y ? Pair{x, y} : Pair{y, x}; }
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

enum class ErrorCode {
    kOutOfHorizon,
    kMissingLimit,
    kInvalidArgument,
    kInconsistentFunctional,
    kUseBoundViolation,
    kPreconditionViolated,
    kInsufficientWitness,
    kInsufficientSolution,
    kInvalidCondition,
    kPressBlocked,
    kNotAChain,
    kUnlabelableTree,
    kUnsupported,
    kParseError,
    kUnknownKind,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code is stable and
/// is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Nat max_element_or(const NatSet& s, Nat fallback) {
    return s.empty() ? fallback : *s.rbegin();
}

}  // namespace ramseylab
