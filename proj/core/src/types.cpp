// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/types.hpp"

namespace ramseylab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kOutOfHorizon: return "out-of-horizon";
        case ErrorCode::kMissingLimit: return "missing-limit";
        case ErrorCode::kInvalidArgument: return "invalid-argument";
        case ErrorCode::kInconsistentFunctional: return "inconsistent-functional";
        case ErrorCode::kUseBoundViolation: return "use-bound-violation";
        case ErrorCode::kPreconditionViolated: return "precondition-violated";
        case ErrorCode::kInsufficientWitness: return "insufficient-witness";
        case ErrorCode::kInsufficientSolution: return "insufficient-solution";
        case ErrorCode::kInvalidCondition: return "invalid-condition";
        case ErrorCode::kPressBlocked: return "press-blocked";
        case ErrorCode::kNotAChain: return "not-a-chain";
        case ErrorCode::kUnlabelableTree: return "unlabelable-tree";
        case ErrorCode::kUnsupported: return "unsupported";
        case ErrorCode::kParseError: return "parse-error";
        case ErrorCode::kUnknownKind: return "unknown-kind";
    }
    return "unknown";
}

}  // namespace ramseylab
