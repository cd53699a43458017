// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/transcript.hpp"

#include <algorithm>

#include "ramseylab/io.hpp"
#include "ramseylab/search.hpp"

namespace ramseylab {

Json ReplayReport::to_json() const {
    Json issues_j = Json::array();
    for (const ReplayIssue& i : issues) {
        issues_j.push_back(Json{{"event", i.event}, {"check", i.check}, {"message", i.message}});
    }
    return Json{{"ok", ok()}, {"events", events}, {"deterministic", deterministic}, {"checks", checks},
                {"issues", issues_j}};
}

namespace {

std::vector<Nat> nat_list(const Json& j) { return j.get<std::vector<Nat>>(); }

NatSet decoded(const NatSet& codes) {
    NatSet out;
    for (Nat c : codes) out.insert(c / 2);
    return out;
}

class Replayer {
public:
    Replayer(const Schedule& schedule, ReplayReport& report) : sched_(schedule), report_(report) {
        reservoir_ = schedule.reservoir;
    }

    void event(std::size_t index, const Json& e) {
        index_ = index;
        const std::size_t stage = e.at("stage").get<std::size_t>();
        const std::string kind = e.at("kind").get<std::string>();
        const Json& payload = e.at("payload");
        const Json& claims = e.at("claims");
        if (stage == 0 || stage > sched_.steps.size()) {
            fail("stage", "stage " + std::to_string(stage) + " is not in the schedule");
            return;
        }
        if (stage != stage_) {
            if (stage < stage_) fail("stage", "stage numbers go backwards");
            stage_ = stage;
            entry_ = current_;
        }
        const StepSpec& step = sched_.steps[stage - 1];
        if (payload.contains("condition")) {
            const Condition q = condition_from_json(payload["condition"]);
            chain(kind, payload, q);
            current_ = q;
        }
        if (kind == "diagonalize") {
            nae(payload["a"].get<Nat>(), payload["b"].get<Nat>());
        } else if (kind == "walk-step") {
            walk_step(step, payload);
        } else if (kind == "extended-segments") {
            extended(step, payload);
        } else if (kind == "reserved-set-added") {
            reserved(step, payload);
        } else if (kind == "path-reservoir") {
            path_reservoir(payload);
        } else if (kind == "diagonalized") {
            diagonalized(step, payload, claims);
        } else if (kind != "rebase" && kind != "blocked" && kind != "p-noop" && kind != "prune") {
            fail("kind", "unknown event kind '" + kind + "'");
        }
        persistent_claims();
    }

    void finish(std::size_t count) {
        index_ = count;
        persistent_claims();
        if (!current_) return;
        for (const auto& [key, seg] : segments_) {
            const ForcingContext ctx = context(key.first);
            for (Nat x : decoded(seg)) {
                count_check("final-segment-limit");
                if (!forces_limit(*current_, ctx, x, key.second)) {
                    fail("final-segment-limit", "segment " + key.first + "/" + std::to_string(key.second) +
                                                    " element " + std::to_string(x) + " lost its forced limit");
                }
            }
        }
        for (const auto& [key, seg] : segments_) {
            const ForcingContext ctx = context(key.first);
            const bool increasing = modes_.at(key) == Mode::kSIPT;
            const JoinedSet js(seg);
            for (Nat l : js.left()) {
                for (Nat r : js.right()) {
                    if (l == r || (increasing && r < l)) continue;
                    count_check("final-segment-value");
                    if (forced_value(*current_, ctx, l, r) != key.second) {
                        fail("final-segment-value", "segment " + key.first + "/" + std::to_string(key.second) +
                                                        ": value of {" + std::to_string(l) + "," +
                                                        std::to_string(r) + "} is not forced");
                    }
                }
            }
        }
    }

private:
    void fail(const std::string& check, const std::string& message) {
        report_.issues.push_back(ReplayIssue{index_, check, message});
    }
    void count_check(const std::string& check) { ++report_.checks[check]; }

    ForcingContext context(const std::string& phi) const {
        return ForcingContext{&sched_.transformers.at(phi), sched_.horizon, sched_.tail, sched_.node_budget};
    }

    void chain(const std::string& kind, const Json& payload, const Condition& q) {
        count_check("chain");
        if (!validate_condition(q).ok()) {
            fail("chain", "condition is invalid");
            return;
        }
        if (!current_) {
            if (!prolongs(q, Condition(0))) fail("chain", "first condition is malformed");
            return;
        }
        if (kind != "rebase") {
            if (!prolongs(q, *current_)) fail("chain", "condition does not extend its predecessor");
            return;
        }
        const Nat x = payload.at("element").get<Nat>();
        const Nat point = payload.at("new_point").get<Nat>();
        Condition expected = *current_;
        const auto& old = expected.limit(x);
        if (!old || old->point != payload.at("old_point").get<Nat>() || old->point >= point) {
            fail("rebase", "rebase of " + std::to_string(x) + " does not raise its logged limit point");
            return;
        }
        expected.set_limit(x, Limit{old->color, point});
        if (!(expected == q)) fail("rebase", "rebase changes more than the limit point of " + std::to_string(x));
        if (!entry_ || !prolongs(q, *entry_)) fail("rebase", "rebased condition does not prolong the stage entry");
    }

    void nae(Nat a, Nat b) {
        count_check("not-all-equal");
        diagonal_.push_back(Pair::of(a, b));
        if (!current_ || !press_check(*current_, ButtonTriple{0, a, b})) {
            fail("not-all-equal", "pair {" + std::to_string(a) + "," + std::to_string(b) + "} is not diagonalized");
        }
    }

    void persistent_claims() {
        if (!current_) return;
        for (const Pair& p : diagonal_) {
            count_check("not-all-equal-persists");
            if (!press_check(*current_, ButtonTriple{0, p.first, p.second})) {
                fail("not-all-equal-persists", "pair {" + std::to_string(p.first) + "," +
                                                   std::to_string(p.second) + "} stopped being diagonalized");
            }
        }
        for (const ButtonTriple& t : pressed_) {
            count_check("press-persists");
            if (!press_check(*current_, t)) {
                fail("press-persists", "button of " + std::to_string(t.x) + " is no longer pressed");
            }
        }
    }

    void walk_step(const StepSpec& step, const Json& payload) {
        if (!payload.contains("x") || !current_) return;
        const Nat x = payload["x"].get<Nat>();
        const Color j = payload.at("j").get<Color>();
        count_check("walk-limit");
        if (!forces_limit(*current_, context(step.phi), x, j)) {
            fail("walk-limit", "walk element " + std::to_string(x) + " does not have a forced limit");
        }
        if (payload.contains("pressed")) {
            const Json& t = payload["pressed"];
            const ButtonTriple b{t[0].get<Nat>(), t[1].get<Nat>(), t[2].get<Nat>()};
            count_check("press");
            if (!press_check(*current_, b)) fail("press", "button of " + std::to_string(b.x) + " is not pressed");
            pressed_.push_back(b);
        }
    }

    void check_reservoir(const std::vector<Nat>& next, const NatSet& seg) {
        count_check("reservoir");
        for (Nat x : next) {
            if (std::find(reservoir_.begin(), reservoir_.end(), x) == reservoir_.end()) {
                fail("reservoir", "element " + std::to_string(x) + " was not in the reservoir");
                break;
            }
        }
        if (!std::is_sorted(next.begin(), next.end())) fail("reservoir", "reservoir is not increasing");
        const NatSet d = decoded(seg);
        if (!next.empty() && !d.empty() && *d.rbegin() >= next.front()) {
            fail("reservoir", "segment reaches past the start of the reservoir");
        }
        reservoir_ = next;
    }

    void extended(const StepSpec& step, const Json& payload) {
        const std::string& phi = step.phi;
        const ForcingContext ctx = context(phi);
        const bool increasing = step.mode == Mode::kSIPT;
        const Json& xs = payload.at("x");
        NatSet all;
        for (Color j : {Color{0}, Color{1}}) {
            const NatSet seg = natset_from_json(payload.at("segments")[j]);
            NatSet expected = segments_[{phi, j}];
            const Nat x0 = xs[j][0].get<Nat>();
            const Nat x1 = xs[j][1].get<Nat>();
            expected.insert(2 * x0);
            expected.insert(2 * x1 + 1);
            count_check("segment-growth");
            if (seg != expected) fail("segment-growth", "segment " + std::to_string(j) + " differs from the claim");
            if (increasing && x1 <= x0) fail("segment-growth", "increasing mode needs x_j0 < x_j1");
            for (Nat x : decoded(seg)) {
                count_check("segment-limit");
                if (!forces_limit(*current_, ctx, x, j)) {
                    fail("segment-limit", "limit of " + std::to_string(x) + " is not forced to " + std::to_string(j));
                }
            }
            const JoinedSet js(seg);
            for (Nat l : js.left()) {
                for (Nat r : js.right()) {
                    if (l == r || (increasing && r < l)) continue;
                    count_check("segment-value");
                    if (forced_value(*current_, ctx, l, r) != j) {
                        fail("segment-value", "value of {" + std::to_string(l) + "," + std::to_string(r) +
                                                  "} is not forced to " + std::to_string(j));
                    }
                }
            }
            segments_[{phi, j}] = seg;
            modes_[{phi, j}] = step.mode;
            all.insert(seg.begin(), seg.end());
        }
        check_reservoir(nat_list(payload.at("reservoir")), all);
    }

    void reserved(const StepSpec& step, const Json& payload) {
        const ForcingContext ctx = context(step.phi);
        const Color j = payload.at("j").get<Color>();
        if (payload.at("color").get<Color>() != 1 - j) fail("reserved", "reserved color is not 1 - j");
        for (Nat x : natset_from_json(payload.at("set"))) {
            count_check("reserved");
            const SearchResult r = force_extension(*current_, ctx, {Fact::limit(x, j)});
            if (r.status != SearchStatus::kImpossible) {
                fail("reserved", "element " + std::to_string(x) + " admits an extension forcing limit " +
                                     std::to_string(j));
            }
        }
    }

    void path_reservoir(const Json& payload) {
        const std::vector<Nat> path = nat_list(payload.at("path"));
        count_check("path-reservoir");
        if (nat_list(payload.at("reservoir")) != path) fail("path-reservoir", "reservoir is not the path range");
        check_reservoir(path, NatSet{});
    }

    void diagonalized(const StepSpec& step, const Json& payload, const Json& claims) {
        const Color j = step.color;
        const auto key = std::make_pair(step.phi, j);
        const NatSet before = natset_from_json(payload.at("segment_before"));
        const NatSet seg = natset_from_json(payload.at("segment"));
        const Json& wj = payload.at("witness");
        const NatSet fl = natset_from_json(wj.at("left"));
        const NatSet fr = natset_from_json(wj.at("right"));
        const std::vector<Nat> values = nat_list(wj.at("values"));
        count_check("segment-growth");
        if (before != segments_[key]) fail("segment-growth", "segment_before differs from the replayed segment");
        NatSet expected = before;
        for (Nat x : fl) expected.insert(2 * x);
        for (Nat y : fr) expected.insert(2 * y + 1);
        if (seg != expected) fail("segment-growth", "segment is not segment_before joined with the witness");

        const std::vector<Nat> path = nat_list(payload.at("path"));
        const NatSet range(path.begin(), path.end());
        count_check("witness");
        if (!std::includes(range.begin(), range.end(), fl.begin(), fl.end()) ||
            !std::includes(range.begin(), range.end(), fr.begin(), fr.end())) {
            fail("witness", "witness uses elements off the path");
        }
        if (!std::is_sorted(values.begin(), values.end()) ||
            std::adjacent_find(values.begin(), values.end()) != values.end()) {
            fail("witness", "witness values are not increasing");
        }
        const OracleFunctional& gamma = sched_.functionals.at(step.functional);
        for (std::size_t p = 0; p < values.size(); ++p) {
            const Nat v = values[p];
            const Nat input = query_input(variant(step.mode), p, v);
            count_check("witness");
            if (gamma.evaluate(seg, input).value != Color{1}) {
                fail("witness", "functional does not output 1 on input " + std::to_string(input));
            }
        }
        const ForcingContext ctx = context(step.phi);
        for (Nat x : path) {
            count_check("walk-limit");
            if (!forces_limit(*current_, ctx, x, j)) {
                fail("walk-limit", "path element " + std::to_string(x) + " lost its forced limit");
            }
        }
        bool covered = false;
        for (const Json& pr : claims.at("not_all_equal")) {
            const Nat a = pr[0].get<Nat>();
            const Nat b = pr[1].get<Nat>();
            count_check("not-all-equal");
            if (!press_check(*current_, ButtonTriple{0, a, b})) {
                fail("not-all-equal", "claimed pair {" + std::to_string(a) + "," + std::to_string(b) +
                                          "} is not diagonalized");
            }
            for (std::size_t p = 0; p + 1 < values.size(); ++p) {
                for (std::size_t q = p + 1; q < values.size(); ++q) {
                    if (values[p] == a && values[q] == b) covered = true;
                }
            }
        }
        count_check("witness-diagonalized");
        if (!covered) fail("witness-diagonalized", "no pair of witness values is diagonalized");
        segments_[key] = seg;
        modes_[key] = step.mode;
        check_reservoir(nat_list(payload.at("reservoir")), seg);
    }

    const Schedule& sched_;
    ReplayReport& report_;
    std::size_t index_{0};
    std::size_t stage_{0};
    std::optional<Condition> current_;
    std::optional<Condition> entry_;
    std::vector<Nat> reservoir_;
    std::map<std::pair<std::string, Color>, NatSet> segments_;
    std::map<std::pair<std::string, Color>, Mode> modes_;
    std::vector<Pair> diagonal_;
    std::vector<ButtonTriple> pressed_;
};

}  // namespace

ReplayReport verify_transcript(const Schedule& schedule, const Transcript& transcript, bool rerun) {
    ReplayReport report;
    report.events = transcript.events().size();
    Replayer replay(schedule, report);
    std::size_t i = 0;
    for (const Json& e : transcript.events()) {
        try {
            replay.event(i, e);
        } catch (const std::exception& ex) {
            report.issues.push_back(ReplayIssue{i, "format", ex.what()});
        }
        ++i;
    }
    replay.finish(i);
    if (rerun) {
        ++report.checks["determinism"];
        report.deterministic = run_stages(schedule).transcript.to_jsonl() == transcript.to_jsonl();
    }
    return report;
}

}  // namespace ramseylab
