// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "ramseylab/halting.hpp"
#include "ramseylab/io.hpp"
#include "ramseylab/reduction.hpp"
#include "ramseylab/transcript.hpp"

namespace ramseylab::cli {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_pair(const Pair& p) { return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}"; }

// A set argument: a file, inline JSON, or a comma list such as 0,2,5.
Json set_json(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_json_file(arg);
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
        try {
            return Json::parse(arg);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorCode::kParseError, std::string("inline set: ") + e.what());
        }
    }
    if (!arg.empty() && arg.find_first_not_of("0123456789,") == std::string::npos) {
        Json out = Json::array();
        std::stringstream in(arg);
        for (std::string item; std::getline(in, item, ',');) {
            if (item.empty()) throw Usage("empty element in set '" + arg + "'");
            out.push_back(std::stoull(item));
        }
        return out;
    }
    return read_json_file(arg);
}

// A plain set: a JSON array, or an object with "set".
NatSet read_set(const std::string& arg) {
    const Json j = set_json(arg);
    return natset_from_json(j.is_object() ? j.at("set") : j);
}

// A joined set: an array of codes, or an object with "left" and "right".
JoinedSet read_joined(const std::string& arg) {
    const Json j = set_json(arg);
    if (j.is_object() && j.contains("left")) {
        return JoinedSet::encode(natset_from_json(j.at("left")), natset_from_json(j.at("right")));
    }
    return JoinedSet(natset_from_json(j.is_object() ? j.at("codes") : j));
}

// "a..b" (inclusive) or a comma list.
std::vector<Nat> parse_range(const std::string& text) {
    std::vector<Nat> out;
    const auto num = [&](const std::string& s) -> Nat {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw Usage("bad number '" + s + "' in '" + text + "'");
        }
        return static_cast<Nat>(std::stoul(s));
    };
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const Nat lo = num(text.substr(0, dots));
        const Nat hi = num(text.substr(dots + 2));
        for (Nat x = lo; x <= hi; ++x) out.push_back(x);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(num(item));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) throw Usage("reservoir '" + text + "' is not strictly increasing");
    }
    return out;
}

Threshold default_theta() {
    const char* env = std::getenv("RAMSEYLAB_THETA");
    if (env == nullptr || *env == '\0') return std::nullopt;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || std::stoul(s) == 0) {
        throw Usage("RAMSEYLAB_THETA must be a positive integer");
    }
    return static_cast<Nat>(std::stoul(s));
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        write_text_file(*path, text);
    } else {
        out << text;
    }
}

std::string verdict_name(HomogeneityKind k) {
    switch (k) {
        case HomogeneityKind::kHomogeneous: return "homogeneous";
        case HomogeneityKind::kPHomogeneous: return "p-homogeneous";
        case HomogeneityKind::kIncreasingPHomogeneous: return "increasing p-homogeneous";
        case HomogeneityKind::kLimitHomogeneous: return "limit homogeneous";
    }
    return "?";
}

// ---- check ----

struct CheckArgs {
    std::string coloring;
    std::string set;
    std::string kind = "homog";
    std::string condition;
    bool partial = false;
    std::string functional;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    if (a.coloring.empty() && a.condition.empty() && a.functional.empty()) {
        throw Usage("check needs --coloring, --condition or --functional");
    }
    bool ok = true;
    Json report = Json::object();
    if (!a.coloring.empty()) {
        if (a.set.empty()) throw Usage("check --coloring needs --set");
        const auto kind = parse_homogeneity_kind(a.kind);
        if (!kind) throw Usage("unknown --kind '" + a.kind + "'");
        const Coloring f = coloring_from_json(read_json_file(a.coloring));
        const bool joined = *kind == HomogeneityKind::kPHomogeneous || *kind == HomogeneityKind::kIncreasingPHomogeneous;
        const HomogeneityResult r =
            joined ? check_homogeneity(f, read_joined(a.set), *kind) : check_homogeneity(f, read_set(a.set), *kind);
        std::string line;
        if (r.verdict == Verdict::kHolds) {
            line = verdict_name(*kind) + " color " + std::to_string(*r.color);
        } else if (r.verdict == Verdict::kVacuous) {
            line = verdict_name(*kind) + " (vacuous)";
        } else {
            ok = false;
            line = "not " + verdict_name(*kind) + ": counterexample " + format_pair(*r.counterexample);
        }
        report["homogeneity"] = Json{{"kind", a.kind},
                                     {"verdict", r.verdict == Verdict::kHolds    ? "holds"
                                                 : r.verdict == Verdict::kFails ? "fails"
                                                                                 : "vacuous"},
                                     {"color", r.color ? Json(*r.color) : Json(nullptr)},
                                     {"counterexample", r.counterexample ? Json{r.counterexample->first,
                                                                                r.counterexample->second}
                                                                          : Json(nullptr)}};
        if (!a.json) out << line << "\n";
    }
    if (!a.condition.empty()) {
        const Json j = read_json_file(a.condition);
        const LimitMode mode = a.partial ? LimitMode::kPartial : LimitMode::kTotal;
        // Load the data without the loader's own validation so every problem is reported.
        const Condition raw(coloring_from_json(Json{{"horizon", j.at("n")},
                                                    {"entries", j.value("sigma", Json::array())},
                                                    {"limits", j.value("l", Json::array())}}));
        const ConditionReport r = validate_condition(raw, mode);
        Json v = Json::array();
        for (const Pair& p : r.violations) v.push_back(Json{p.first, p.second});
        report["condition"] = Json{{"valid", r.ok()}, {"violations", v}, {"missing_limits", r.missing_limits}};
        if (!a.json) {
            if (r.ok()) {
                out << "valid condition of length " << raw.length() << "\n";
            } else if (!r.violations.empty()) {
                out << "invalid condition: pair " << format_pair(r.violations.front()) << " breaks its limit\n";
            } else {
                out << "invalid condition: no limit for element " << r.missing_limits.front() << "\n";
            }
        }
        ok = ok && r.ok();
    }
    if (!a.functional.empty()) {
        const Json j = read_json_file(a.functional);
        std::vector<Axiom> axioms;
        try {
            axioms = functional_from_json(j).axioms();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::kInconsistentFunctional) throw;
            report["functional"] = Json{{"consistent", false}, {"message", e.what()}};
            if (!a.json) out << "inconsistent functional: " << e.what() << "\n";
            ok = false;
        }
        if (!report.contains("functional")) {
            report["functional"] = Json{{"consistent", true}, {"axioms", axioms.size()}};
            if (!a.json) out << "consistent functional with " << axioms.size() << " axioms\n";
        }
    }
    if (a.json) {
        report["ok"] = ok;
        out << report.dump(2) << "\n";
    }
    return ok ? kExitOk : kExitDomainFailure;
}

// ---- reduce ----

struct ReduceArgs {
    std::string op = "chain";
    std::string from;
    std::string to;
    std::string coloring;
    std::string set;
    int color = -1;
    std::optional<std::string> out;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    Json result;
    if (a.op == "chain") {
        const auto from = parse_principle(a.from);
        const auto to = parse_principle(a.to);
        if (!from || !to) throw Usage("--from and --to must be one of D, SIPT, SPT, SRT");
        const NatSet sol = forward_chain(*from, *to, read_set(a.set));
        result = Json{{"principle", a.to}, {"solution", to_json(sol)}};
        if (!a.coloring.empty()) {
            const Coloring f = coloring_from_json(read_json_file(a.coloring));
            result["valid"] = is_solution(f, *to, sol);
        }
    } else if (a.op == "limit") {
        if (a.color != 0 && a.color != 1) throw Usage("reduce limit needs --color 0 or 1");
        const Coloring f = coloring_from_json(read_json_file(a.coloring));
        const GreedyHomogeneous g = limit_to_homogeneous(f, read_set(a.set), static_cast<Color>(a.color));
        result = Json{{"color", a.color}, {"solution", g.elements}, {"rejected", g.rejected}};
    } else if (a.op == "ipt") {
        const Coloring f = coloring_from_json(read_json_file(a.coloring));
        const IptReduction r = ipt_to_homogeneous(f, read_joined(a.set));
        result = Json{{"color", r.color},
                      {"left_min", r.left_min},
                      {"right_witness", r.right_witness},
                      {"solution", r.homogeneous.elements},
                      {"rejected", r.homogeneous.rejected}};
    } else {
        throw Usage("reduce operation must be chain, limit or ipt");
    }
    emit(out, a.out, result.dump(2) + "\n");
    if (result.contains("valid") && !result["valid"].get<bool>()) return kExitDomainFailure;
    return kExitOk;
}

// ---- code ----

struct CodeArgs {
    std::string action;
    std::string approx;
    Nat horizon = 0;
    std::string set;
    std::optional<std::string> out;
    bool json = false;
};

int cmd_code(const CodeArgs& a, std::ostream& out) {
    const CEApproximation approx = approximation_from_json(read_json_file(a.approx));
    if (a.action == "encode") {
        if (a.horizon == 0) throw Usage("code encode needs --horizon");
        emit(out, a.out, to_json(build_coding_coloring(approx, a.horizon)).dump() + "\n");
        return kExitOk;
    }
    if (a.action != "decode") throw Usage("code action must be encode or decode");
    if (a.set.empty()) throw Usage("code decode needs --set");
    const JoinedSet z = read_joined(a.set);
    bool agree = true;
    Json rows = Json::array();
    for (Nat x = 0; x < approx.domain(); ++x) {
        const bool decoded = decode_membership(approx, z, x);
        const bool truth = approx.final_set().contains(x);
        agree = agree && decoded == truth;
        rows.push_back(Json{{"z", x}, {"decoded", decoded}, {"final", truth}});
        if (!a.json) {
            out << x << ": " << (decoded ? "in" : "out") << (decoded == truth ? "" : "  MISMATCH") << "\n";
        }
    }
    if (a.json) out << Json{{"agree", agree}, {"rows", rows}}.dump(2) << "\n";
    return agree ? kExitOk : kExitDomainFailure;
}

// ---- tree ----

struct TreeArgs {
    std::string functional;
    Nat k = 0;
    std::string reservoir;
    int arity = 2;
    std::string variant = "plain";
    std::string h;
    Nat depth_cap = 4;
    std::optional<Nat> theta;
    bool labeled_subtree = false;
    std::optional<std::string> out;
    std::optional<std::string> dot;
};

int cmd_tree(const TreeArgs& a, std::ostream& out) {
    TreeParams p;
    p.k = a.k;
    p.gamma = functional_from_json(read_json_file(a.functional));
    if (!a.h.empty()) p.h = read_joined(a.h).codes();
    p.reservoir = parse_range(a.reservoir);
    if (a.arity != 2 && a.arity != 3) throw Usage("--arity must be 2 or 3");
    p.arity = a.arity == 2 ? Arity::kTwo : Arity::kThree;
    const auto v = parse_parity_variant(a.variant);
    if (!v) throw Usage("--variant must be plain or shifted");
    p.variant = *v;
    p.depth_cap = a.depth_cap;
    const Threshold theta = a.theta ? a.theta : default_theta();

    LabeledTree tree = build_tree(p);
    int status = kExitOk;
    if (const auto path = depth_exhausted_path(tree)) {
        out << "depth-exhausted path " << format_path(*path) << "; tree left unlabeled\n";
        status = kExitDomainFailure;
    } else {
        tree = label_tree(std::move(tree), theta);
        if (a.labeled_subtree) tree = labeled_subtree(tree, theta);
        if (p.arity == Arity::kThree) tree = compute_sort(std::move(tree), theta);
    }
    out << "nodes " << tree.size() << "\n";
    for (const TreeNode& n : tree.nodes()) {
        if (n.kind != NodeKind::kWitnessTerminal) continue;
        out << "terminal " << format_path(n.path) << " label " << (n.label ? format_label(*n.label) : "-") << "\n";
    }
    if (const auto& root = tree.node(LabeledTree::root()).label) out << "root label " << format_label(*root) << "\n";
    if (a.out) write_text_file(*a.out, to_json(tree).dump(2) + "\n");
    if (a.dot) write_text_file(*a.dot, to_dot(tree));
    return status;
}

// ---- run ----

struct RunArgs {
    std::string schedule;
    std::optional<std::string> transcript;
    bool verify = false;
    bool json = false;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    Schedule s = schedule_from_json(read_json_file(a.schedule));
    if (const Threshold theta = default_theta()) {
        for (StepSpec& step : s.steps) {
            if (!step.theta) step.theta = theta;
        }
    }
    const RunResult r = run_stages(s);
    if (a.transcript) write_text_file(*a.transcript, r.transcript.to_jsonl());
    Json summary{{"stages", r.outcomes.size()}, {"events", r.transcript.events().size()}, {"halted", r.halted}};
    Json outcomes = Json::array();
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        outcomes.push_back(Json{{"stage", i + 1}, {"outcome", to_string(r.outcomes[i].kind)},
                                {"rationale", r.outcomes[i].rationale}});
    }
    summary["outcomes"] = outcomes;
    bool ok = true;
    if (a.verify) {
        const ReplayReport rep = verify_transcript(s, r.transcript);
        summary["verification"] = rep.to_json();
        ok = rep.ok();
    }
    if (a.json) {
        out << summary.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
            out << "stage " << i + 1 << ": " << to_string(r.outcomes[i].kind) << "\n";
        }
        if (r.halted) out << "halted: blocked\n";
        if (!a.transcript) out << r.transcript.to_jsonl();
        if (a.verify) {
            const Json& v = summary["verification"];
            std::size_t checks = 0;
            for (const auto& [name, n] : v["checks"].items()) checks += n.get<std::size_t>();
            out << "verification: " << (ok ? "ok" : "FAILED") << " (" << v["events"].get<std::size_t>()
                << " events, " << checks << " checks)\n";
            for (const Json& i : v["issues"]) {
                out << "  event " << i["event"].get<std::size_t>() << " [" << i["check"].get<std::string>()
                    << "] " << i["message"].get<std::string>() << "\n";
            }
            if (!v["deterministic"].get<bool>()) out << "  rerun produced a different transcript\n";
        }
    }
    return ok ? kExitOk : kExitDomainFailure;
}

// ---- relations ----

std::string short_citation(const RelationEntry& e) {
    if (e.basis == RelationBasis::kCited) {
        const auto colon = e.citation.find(':');
        return colon == std::string::npos ? e.citation : e.citation.substr(0, colon);
    }
    return std::string(to_string(e.basis)) + ": " + e.citation;
}

int cmd_relations(bool json, const std::vector<std::string>& query, std::ostream& out) {
    const RelationMatrix m = relation_matrix();
    if (!query.empty()) {
        if (query.size() != 3) throw Usage("--query takes P Q r");
        const auto p = parse_principle(query[0]);
        const auto q = parse_principle(query[1]);
        const auto r = parse_reducibility(query[2]);
        if (!p || !q || !r) throw Usage("--query takes two of D SIPT SPT SRT and one of c W sc sW");
        const RelationEntry& e = m.at(*p, *q, *r);
        if (json) {
            out << Json{{"reduced", query[0]}, {"target", query[1]}, {"reducibility", query[2]},
                        {"status", to_string(e.status)}, {"basis", to_string(e.basis)}, {"citation", e.citation}}
                       .dump(2)
                << "\n";
        } else {
            out << to_string(e.status) << " (" << short_citation(e) << ")\n";
        }
        return kExitOk;
    }
    if (json) {
        Json entries = Json::array();
        for (Reducibility r : kAllReducibilities) {
            for (Principle p : kAllPrinciples) {
                for (Principle q : kAllPrinciples) {
                    const RelationEntry& e = m.at(p, q, r);
                    entries.push_back(Json{{"reduced", to_string(p)}, {"target", to_string(q)},
                                           {"reducibility", to_string(r)}, {"status", to_string(e.status)},
                                           {"basis", to_string(e.basis)}, {"citation", e.citation}});
                }
            }
        }
        out << Json{{"principles", Json{"D", "SIPT", "SPT", "SRT"}},
                    {"reducibilities", Json{"c", "W", "sc", "sW"}},
                    {"entries", entries}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    for (Reducibility r : kAllReducibilities) {
        out << "<=" << to_string(r) << "  (row reduces to column)\n";
        out << "       D     SIPT  SPT   SRT\n";
        for (Principle p : kAllPrinciples) {
            std::string row = std::string(to_string(p));
            row.resize(6, ' ');
            for (Principle q : kAllPrinciples) {
                std::string cell = m.at(p, q, r).status == RelationStatus::kHolds ? "yes" : "no";
                cell.resize(6, ' ');
                row += cell;
            }
            out << row << "\n";
        }
        out << "\n";
    }
    out << "cited entries:\n";
    for (Reducibility r : kAllReducibilities) {
        for (Principle p : kAllPrinciples) {
            for (Principle q : kAllPrinciples) {
                const RelationEntry& e = m.at(p, q, r);
                if (e.basis != RelationBasis::kCited) continue;
                out << "  " << to_string(p) << " <=" << to_string(r) << " " << to_string(q) << ": "
                    << to_string(e.status) << " (" << e.citation << ")\n";
            }
        }
    }
    return kExitOk;
}

// ---- gen ----

struct GenArgs {
    std::string what;
    std::uint64_t seed = 0;
    Nat horizon = 16;
    Nat stab_bound = 4;
    Nat domain = 8;
    Nat stages = 10;
    std::optional<std::string> out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    if (a.what == "coloring") {
        emit(out, a.out, to_json(random_stable_coloring(a.seed, a.horizon, a.stab_bound)).dump() + "\n");
        return kExitOk;
    }
    if (a.what != "approx") throw Usage("gen target must be coloring or approx");
    if (a.stages == 0) throw Usage("--stages must be positive");
    std::mt19937_64 rng(a.seed);
    std::vector<NatSet> stages(1);
    std::bernoulli_distribution add(0.3);
    for (Nat s = 1; s < a.stages; ++s) {
        NatSet next = stages.back();
        for (Nat x = 0; x < a.domain; ++x) {
            if (!next.contains(x) && add(rng) && add(rng)) next.insert(x);
        }
        stages.push_back(std::move(next));
    }
    emit(out, a.out, to_json(CEApproximation(a.domain, std::move(stages))).dump() + "\n");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite experiments with stable Ramsey-type colorings", "ramseylab"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Check homogeneity, conditions or functional consistency");
    c->add_option("--coloring", check.coloring, "Coloring JSON");
    c->add_option("--set", check.set, "Set: file, inline JSON or comma list (codes or {left,right} for joined kinds)");
    c->add_option("--kind", check.kind, "homog | p-homog | incr-p-homog | limit-homog");
    c->add_option("--condition", check.condition, "Condition JSON");
    c->add_flag("--partial", check.partial, "Allow elements without limits");
    c->add_option("--functional", check.functional, "Functional JSON");
    c->add_flag("--json", check.json, "JSON report");

    ReduceArgs reduce;
    auto* r = app.add_subcommand("reduce", "Map a solution along a reduction");
    r->add_option("op", reduce.op, "chain (default) | limit | ipt");
    r->add_option("--from", reduce.from, "Source principle (chain)");
    r->add_option("--to", reduce.to, "Target principle (chain)");
    r->add_option("--coloring", reduce.coloring, "Coloring JSON");
    r->add_option("--set,--solution", reduce.set, "Input solution: file, inline JSON or comma list")->required();
    r->add_option("--color", reduce.color, "Limit color (limit)");
    r->add_option("--out", reduce.out, "Output path");

    CodeArgs code;
    auto* k = app.add_subcommand("code", "Encode a c.e. approximation or decode membership");
    k->add_option("action", code.action, "encode | decode")->required();
    k->add_option("--approx", code.approx, "Approximation JSON")->required();
    k->add_option("--horizon", code.horizon, "Coloring horizon (encode)");
    k->add_option("--set", code.set, "Joined set for decode: file, inline JSON or comma list of codes");
    k->add_option("--out", code.out, "Output path");
    k->add_flag("--json", code.json, "JSON report");

    TreeArgs tree;
    auto* t = app.add_subcommand("tree", "Build and label a witness tree");
    t->add_option("--functional", tree.functional, "Functional JSON")->required();
    t->add_option("--k", tree.k, "Lower bound for witness values");
    t->add_option("--reservoir", tree.reservoir, "Reservoir, as a..b or a comma list")->required();
    t->add_option("--arity", tree.arity, "2 or 3");
    t->add_option("--variant", tree.variant, "plain | shifted");
    t->add_option("--segment", tree.h, "Joined segment JSON");
    t->add_option("--depth-cap", tree.depth_cap, "Maximum path length");
    t->add_option("--theta", tree.theta, "Labeling threshold")->check(CLI::PositiveNumber);
    t->add_flag("--labeled-subtree", tree.labeled_subtree, "Keep only the labeled subtree");
    t->add_option("--out", tree.out, "Tree JSON path");
    t->add_option("--dot", tree.dot, "DOT path");

    RunArgs run;
    auto* u = app.add_subcommand("run", "Run a schedule of construction stages");
    u->add_option("--schedule", run.schedule, "Schedule JSON")->required();
    u->add_option("--transcript", run.transcript, "Transcript path (JSON lines)");
    u->add_flag("--verify", run.verify, "Replay-verify the transcript");
    u->add_flag("--json", run.json, "JSON summary");

    bool rel_json = false;
    std::vector<std::string> query;
    auto* m = app.add_subcommand("relations", "Print the reducibility matrix");
    m->add_flag("--json", rel_json, "JSON output");
    m->add_option("--query", query, "P Q r")->expected(3);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate random instances");
    g->add_option("what", gen.what, "coloring | approx")->required();
    g->add_option("--seed", gen.seed, "Random seed")->required();
    g->add_option("--horizon", gen.horizon, "Coloring horizon");
    g->add_option("--stab-bound", gen.stab_bound, "Largest limit point");
    g->add_option("--domain", gen.domain, "Approximation domain");
    g->add_option("--stages", gen.stages, "Number of stages");
    g->add_option("--out", gen.out, "Output path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c->parsed()) return cmd_check(check, out);
        if (r->parsed()) return cmd_reduce(reduce, out);
        if (k->parsed()) return cmd_code(code, out);
        if (t->parsed()) return cmd_tree(tree, out);
        if (u->parsed()) return cmd_run(run, out);
        if (m->parsed()) return cmd_relations(rel_json, query, out);
        if (g->parsed()) return cmd_gen(gen, out);
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::kParseError ? kExitUsage : kExitDomainFailure;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ramseylab::cli
