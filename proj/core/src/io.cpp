// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/io.hpp"

#include <fstream>
#include <sstream>

namespace ramseylab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

Nat as_nat(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(what + " must be a non-negative integer");
    const auto v = j.get<unsigned long long>();
    if (v > std::numeric_limits<Nat>::max()) bad(what + " is too large");
    return static_cast<Nat>(v);
}

Color as_color(const Json& j, const std::string& what) {
    const Nat c = as_nat(j, what);
    if (c > 1) bad(what + " must be 0 or 1");
    return static_cast<Color>(c);
}

const Json& as_array(const Json& j, const std::string& what, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) bad(what + " must be an array");
    if (size && j.size() != *size) bad(what + " must have " + std::to_string(*size) + " entries");
    return j;
}

Nat nat_or(const Json& j, const char* key, Nat fallback) {
    const auto it = j.find(key);
    return it == j.end() ? fallback : as_nat(*it, key);
}

// Reads [[x,y,c],...] into the coloring; [[x,i,z],...] into its limits.
void read_entries(Coloring& f, const Json& entries, const Json* limits) {
    std::set<Pair> seen;
    for (const Json& e : as_array(entries, "entries")) {
        as_array(e, "entry", 3);
        const Nat x = as_nat(e[0], "entry x");
        const Nat y = as_nat(e[1], "entry y");
        const Color c = as_color(e[2], "entry color");
        if (x == y || x >= f.horizon() || y >= f.horizon()) {
            bad("entry [" + std::to_string(x) + "," + std::to_string(y) + "] is not a pair below horizon " +
                std::to_string(f.horizon()));
        }
        if (!seen.insert(Pair::of(x, y)).second) {
            bad("duplicate entry for pair {" + std::to_string(x) + "," + std::to_string(y) + "}");
        }
        f.set(x, y, c);
    }
    if (limits == nullptr) return;
    for (const Json& e : as_array(*limits, "limits")) {
        as_array(e, "limit", 3);
        const Nat x = as_nat(e[0], "limit element");
        if (x >= f.horizon()) bad("limit for element " + std::to_string(x) + " is outside the horizon");
        if (f.limit(x)) bad("duplicate limit for element " + std::to_string(x));
        f.set_limit(x, Limit{as_color(e[1], "limit color"), as_nat(e[2], "limit point")});
    }
}

Json entries_json(const Coloring& f, bool only_ones) {
    Json out = Json::array();
    for (Nat y = 1; y < f.horizon(); ++y) {
        for (Nat x = 0; x < y; ++x) {
            const Color c = f.at(x, y);
            if (!only_ones || c == 1) out.push_back(Json{x, y, c});
        }
    }
    return out;
}

Json limits_json(const Coloring& f) {
    Json out = Json::array();
    for (Nat x = 0; x < f.horizon(); ++x) {
        if (const auto& l = f.limit(x)) out.push_back(Json{x, l->color, l->point});
    }
    return out;
}

Axiom axiom_from_json(const Json& j) {
    if (j.is_array()) {
        as_array(j, "axiom", 4);
        return Axiom{as_nat(j[0], "axiom input"), natset_from_json(j[1]), natset_from_json(j[2]),
                     as_color(j[3], "axiom output")};
    }
    // Long and short key spellings are both accepted.
    const auto key = [&](const char* long_name, const char* short_name) -> const Json* {
        if (j.contains(long_name)) return &j[long_name];
        if (j.contains(short_name)) return &j[short_name];
        return nullptr;
    };
    Axiom a;
    const Json* input = key("input", "n");
    const Json* output = key("output", "out");
    if (input == nullptr || output == nullptr) bad("axiom needs an input (n) and an output (out)");
    a.input = as_nat(*input, "axiom input");
    a.output = as_color(*output, "axiom output");
    if (const Json* pos = key("positive", "pos")) a.positive = natset_from_json(*pos);
    if (const Json* neg = key("negative", "neg")) a.negative = natset_from_json(*neg);
    return a;
}

Json sort_json(const SortValue& s) {
    Json out = Json::array();
    for (const NatSet& m : s) out.push_back(to_json(m));
    return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        bad(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
    out << text;
}

Json to_json(const Coloring& f) {
    return Json{{"horizon", f.horizon()}, {"entries", entries_json(f, true)}, {"limits", limits_json(f)}};
}

Coloring coloring_from_json(const Json& j) {
    Coloring f(as_nat(field(j, "horizon"), "horizon"));
    const Json empty = Json::array();
    read_entries(f, j.contains("entries") ? j["entries"] : empty, j.contains("limits") ? &j["limits"] : nullptr);
    return f;
}

Json to_json(const Condition& p) {
    return Json{{"n", p.length()}, {"sigma", entries_json(p.data(), true)}, {"l", limits_json(p.data())}};
}

Condition condition_from_json(const Json& j, LimitMode mode) {
    Coloring f(as_nat(field(j, "n"), "n"));
    const Json empty = Json::array();
    read_entries(f, j.contains("sigma") ? j["sigma"] : empty, j.contains("l") ? &j["l"] : nullptr);
    Condition p(std::move(f));
    const ConditionReport r = validate_condition(p, mode);
    if (!r.missing_limits.empty()) {
        throw Error(ErrorCode::kInvalidCondition,
                    "condition has no limit for element " + std::to_string(r.missing_limits.front()));
    }
    if (!r.violations.empty()) {
        const Pair v = r.violations.front();
        throw Error(ErrorCode::kInvalidCondition, "sigma(" + std::to_string(v.first) + "," +
                                                      std::to_string(v.second) + ") contradicts the limit of " +
                                                      std::to_string(v.first));
    }
    return p;
}

Json to_json(const OracleFunctional& fn) {
    Json axioms = Json::array();
    for (const Axiom& a : fn.axioms()) {
        axioms.push_back(Json{{"n", a.input}, {"pos", to_json(a.positive)}, {"neg", to_json(a.negative)}, {"out", a.output}});
    }
    return Json{{"axioms", axioms}, {"monotone", fn.monotone()}};
}

OracleFunctional functional_from_json(const Json& j) {
    const Json& list = j.is_array() ? j : field(j, "axioms");
    std::vector<Axiom> axioms;
    for (const Json& a : as_array(list, "axioms")) axioms.push_back(axiom_from_json(a));
    const bool monotone = j.is_object() && j.value("monotone", false);
    return OracleFunctional(std::move(axioms), monotone);
}

ColoringTransformer transformer_from_json(const Json& j, Nat horizon) {
    // A functional file with a use bound is a transformer of kind "axioms".
    if (j.is_object() && !j.contains("kind") && j.contains("axioms")) {
        return ColoringTransformer(functional_from_json(j), nat_or(j, "use_bound", 1));
    }
    const Json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) bad("transformer kind must be a string");
    const std::string kind = kind_j.get<std::string>();
    const Nat h = nat_or(j, "horizon", horizon);
    if (kind == "identity") return transformers::identity(h);
    if (kind == "flip") return transformers::flip(h);
    if (kind == "constant") return transformers::constant(h, as_color(field(j, "color"), "constant color"));
    if (kind == "button") {
        const Color c = j.contains("color") ? as_color(j["color"], "button color") : Color{1};
        return button_transformer(buttons_from_json(field(j, "Q")), h, c);
    }
    if (kind == "axioms") {
        return ColoringTransformer(functional_from_json(field(j, "functional")), nat_or(j, "use_bound", 1));
    }
    throw Error(ErrorCode::kUnknownKind, "unknown transformer kind '" + kind + "'");
}

Json to_json(const CEApproximation& a) {
    Json stages = Json::array();
    for (const NatSet& s : a.stages()) stages.push_back(to_json(s));
    return Json{{"domain", a.domain()}, {"stages", stages}};
}

CEApproximation approximation_from_json(const Json& j) {
    std::vector<NatSet> stages;
    for (const Json& s : as_array(field(j, "stages"), "stages")) stages.push_back(natset_from_json(s));
    return CEApproximation(as_nat(field(j, "domain"), "domain"), std::move(stages));
}

Json to_json(const NatSet& s) { return Json(std::vector<Nat>(s.begin(), s.end())); }

NatSet natset_from_json(const Json& j) {
    NatSet out;
    for (const Json& e : as_array(j, "set")) out.insert(as_nat(e, "set element"));
    return out;
}

std::vector<ButtonTriple> buttons_from_json(const Json& j) {
    std::vector<ButtonTriple> out;
    for (const Json& t : as_array(j, "Q")) {
        as_array(t, "button", 3);
        out.push_back(ButtonTriple{as_nat(t[0], "button x"), as_nat(t[1], "button a"), as_nat(t[2], "button b")});
    }
    return out;
}

Json to_json(const std::vector<ButtonTriple>& buttons) {
    Json out = Json::array();
    for (const ButtonTriple& t : buttons) out.push_back(Json{t.x, t.a, t.b});
    return out;
}

Json to_json(const Label& label) {
    Json out = Json::array();
    for (const LabelEntry& e : label) out.push_back(e ? Json(*e) : Json("inf"));
    return out;
}

Json to_json(const Witness& w) {
    return Json{{"left", to_json(w.left)}, {"right", to_json(w.right)}, {"values", w.values}};
}

Json to_json(const LabeledTree& tree) {
    const TreeParams& p = tree.params();
    Json params{{"k", p.k},
                {"h", to_json(p.h)},
                {"reservoir", p.reservoir},
                {"arity", p.arity == Arity::kTwo ? 2 : 3},
                {"variant", to_string(p.variant)},
                {"depth_cap", p.depth_cap}};
    Json nodes = Json::array();
    for (const TreeNode& n : tree.nodes()) {
        Json node{{"path", n.path}, {"kind", to_string(n.kind)}};
        node["label"] = n.label ? to_json(*n.label) : Json(nullptr);
        if (n.witness) node["witness"] = to_json(*n.witness);
        if (n.sort) node["sort"] = sort_json(*n.sort);
        node["children"] = n.children;
        nodes.push_back(std::move(node));
    }
    return Json{{"params", params}, {"nodes", nodes}};
}

Schedule schedule_from_json(const Json& j) {
    Schedule s;
    s.horizon = as_nat(field(j, "horizon"), "horizon");
    for (const Json& x : as_array(field(j, "reservoir"), "reservoir")) s.reservoir.push_back(as_nat(x, "reservoir"));
    for (std::size_t i = 1; i < s.reservoir.size(); ++i) {
        if (s.reservoir[i] <= s.reservoir[i - 1]) bad("reservoir must be strictly increasing");
    }
    s.tail = nat_or(j, "tail", s.tail);
    if (j.contains("node_budget")) s.node_budget = as_nat(j["node_budget"], "node_budget");
    if (j.contains("transformers")) {
        for (const auto& [id, t] : field(j, "transformers").items()) {
            s.transformers.emplace(id, transformer_from_json(t, s.horizon));
        }
    }
    if (j.contains("functionals")) {
        for (const auto& [id, f] : field(j, "functionals").items()) {
            s.functionals.emplace(id, functional_from_json(f));
        }
    }
    for (const Json& st : as_array(field(j, "steps"), "steps")) {
        StepSpec step;
        const Json& kind = field(st, "step");
        if (!kind.is_string()) bad("step kind must be a string");
        const std::string k = kind.get<std::string>();
        if (k == "q") {
            step.kind = StepSpec::Kind::kQ;
        } else if (k == "rA") {
            step.kind = StepSpec::Kind::kRA;
        } else if (k == "rB") {
            step.kind = StepSpec::Kind::kRB;
        } else if (k == "p") {
            step.kind = StepSpec::Kind::kP;
        } else {
            throw Error(ErrorCode::kUnknownKind, "unknown step kind '" + k + "'");
        }
        if (step.kind != StepSpec::Kind::kP) {
            step.phi = field(st, "phi").get<std::string>();
            if (!s.transformers.contains(step.phi)) bad("step refers to unknown transformer '" + step.phi + "'");
        }
        if (st.contains("mode")) {
            const auto m = parse_mode(st["mode"].get<std::string>());
            if (!m) bad("mode must be SPT or SIPT");
            step.mode = *m;
        }
        if (step.kind == StepSpec::Kind::kRA || step.kind == StepSpec::Kind::kRB) {
            const char* key = step.kind == StepSpec::Kind::kRA ? "gamma" : "delta";
            step.functional = field(st, key).get<std::string>();
            if (!s.functionals.contains(step.functional)) {
                bad("step refers to unknown functional '" + step.functional + "'");
            }
        }
        if (step.kind == StepSpec::Kind::kRB) step.buttons = buttons_from_json(field(st, "Q"));
        if (st.contains("i")) step.color = as_color(st["i"], "i");
        if (st.contains("j")) step.color = as_color(st["j"], "j");
        if (st.contains("theta")) step.theta = as_nat(st["theta"], "theta");
        step.depth_cap = nat_or(st, "depth_cap", step.depth_cap);
        s.steps.push_back(std::move(step));
    }
    return s;
}

}  // namespace ramseylab
