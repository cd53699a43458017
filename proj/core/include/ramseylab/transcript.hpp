// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramseylab/construction.hpp"

namespace ramseylab {

struct ReplayIssue {
    std::size_t event{0};  // index into the transcript; the event count for final-state checks
    std::string check;
    std::string message;
};

struct ReplayReport {
    std::size_t events{0};
    /// Number of individual predicates re-evaluated, by check name.
    std::map<std::string, std::size_t> checks;
    std::vector<ReplayIssue> issues;
    bool deterministic{true};

    bool ok() const noexcept { return issues.empty() && deterministic; }
    Json to_json() const;
};

/// Re-verifies every event of a transcript produced from `schedule` against
/// the schedule's transformers and functionals:
///  - each condition is valid and extends the one before it, except logged
///    rebases, which must prolong the condition the stage started from;
///  - not-all-equal pairs and pressed buttons hold in every later condition;
///  - segments grow exactly as claimed and stay below the reservoir;
///  - forced limits and values are forced, failed searches fail again;
///  - witnesses evaluate to 1 on the claimed oracle.
/// With `rerun`, also checks that running the schedule again reproduces the
/// transcript byte for byte.
ReplayReport verify_transcript(const Schedule& schedule, const Transcript& transcript, bool rerun = true);

}  // namespace ramseylab
