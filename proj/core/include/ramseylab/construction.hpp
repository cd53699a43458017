// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramseylab/forcing.hpp"
#include "ramseylab/functional.hpp"
#include "ramseylab/search.hpp"
#include "ramseylab/tree.hpp"

namespace ramseylab {

using Json = nlohmann::ordered_json;

/// SPT stages build p-homogeneous segments and use plain trees; SIPT
/// stages build increasing ones and use parity-shifted trees.
enum class Mode { kSPT, kSIPT };
std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view name);
/// Parity variant of the trees walked for a mode: plain for SPT, shifted for SIPT.
ParityVariant variant(Mode m);

struct ReservedSet {
    std::string phi;
    NatSet elements;
    Color color{0};  // limit color shared by the elements
};

struct StageState {
    Condition condition;
    std::map<std::pair<std::string, Color>, NatSet> segments;  // (Φ id, j) -> codes
    std::vector<Nat> reservoir;
    std::vector<ReservedSet> family;
    Nat horizon{0};
    std::size_t stage{0};

    const NatSet& segment(const std::string& phi, Color j) const;
    NatSet& segment(const std::string& phi, Color j) { return segments[{phi, j}]; }
};

enum class OutcomeKind { kExtendedSegments, kReservedSetAdded, kPathReservoir, kDiagonalized, kBlocked, kNoop };
std::string_view to_string(OutcomeKind k);

struct StepOutcome {
    OutcomeKind kind{OutcomeKind::kBlocked};
    Json payload;
    std::string rationale;
};

/// Ordered event log; each event is one JSON object.
class Transcript {
public:
    void emit(std::size_t stage, std::string_view kind, Json payload, Json claims = Json::object());
    const std::vector<Json>& events() const noexcept { return events_; }
    /// One event per line.
    std::string to_jsonl() const;
    static Transcript from_jsonl(const std::string& text);

private:
    std::vector<Json> events_;
};

struct StepSpec {
    enum class Kind { kQ, kRA, kRB, kP };
    Kind kind{Kind::kQ};
    std::string phi;
    std::string functional;  // Γ for rA, Δ for rB
    Mode mode{Mode::kSPT};
    std::vector<ButtonTriple> buttons;  // rB only
    Color color{0};                     // j for rA, i for rB
    Threshold theta;
    Nat depth_cap{6};
};

struct Schedule {
    Nat horizon{0};
    std::vector<Nat> reservoir;
    std::map<std::string, ColoringTransformer> transformers;
    std::map<std::string, OracleFunctional> functionals;
    std::vector<StepSpec> steps;
    Nat tail{3};
    std::size_t node_budget{200000};
};

StageState initial_state(const Schedule& schedule);

StepOutcome q_step(StageState& state, const std::string& phi_id, const ColoringTransformer& phi, Mode mode,
                   Transcript& log, const Schedule& schedule);

struct WalkParams {
    std::string phi_id;
    std::string functional_id;
    const ColoringTransformer* phi{nullptr};
    const OracleFunctional* functional{nullptr};
    Mode mode{Mode::kSPT};
    Color color{0};
    Threshold theta;
    Nat depth_cap{6};
    Nat tail{3};
    std::size_t node_budget{200000};
};

StepOutcome r_step_case_a(StageState& state, const WalkParams& params, Transcript& log);
StepOutcome r_step_case_b(StageState& state, const WalkParams& params, const std::vector<ButtonTriple>& buttons,
                          Transcript& log);

struct RunResult {
    StageState state;
    Transcript transcript;
    std::vector<StepOutcome> outcomes;
    bool halted{false};
};

/// Threads the state through the schedule; stops at the first blocked step.
RunResult run_stages(const Schedule& schedule);

/// Transformer whose value on {v<w} is NAE(f(a_v,b_v), f(a_v,w), f(b_v,w))
/// for v with a button and w > b_v (its complement when color is 0), and
/// 1 - color otherwise. Pressing the button of x forces lim Φ^f(x,·) = color.
ColoringTransformer button_transformer(const std::vector<ButtonTriple>& buttons, Nat horizon, Color color = 1);

}  // namespace ramseylab
