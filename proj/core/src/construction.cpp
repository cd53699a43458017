// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/construction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ramseylab/io.hpp"

namespace ramseylab {

std::string_view to_string(Mode m) { return m == Mode::kSPT ? "SPT" : "SIPT"; }

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "SPT") return Mode::kSPT;
    if (name == "SIPT") return Mode::kSIPT;
    return std::nullopt;
}

ParityVariant variant(Mode m) { return m == Mode::kSPT ? ParityVariant::kPlain : ParityVariant::kShifted; }

std::string_view to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::kExtendedSegments: return "extended-segments";
        case OutcomeKind::kReservedSetAdded: return "reserved-set-added";
        case OutcomeKind::kPathReservoir: return "path-reservoir";
        case OutcomeKind::kDiagonalized: return "diagonalized";
        case OutcomeKind::kBlocked: return "blocked";
        case OutcomeKind::kNoop: return "p-noop";
    }
    return "?";
}

const NatSet& StageState::segment(const std::string& phi, Color j) const {
    static const NatSet kEmpty;
    const auto it = segments.find({phi, j});
    return it == segments.end() ? kEmpty : it->second;
}

void Transcript::emit(std::size_t stage, std::string_view kind, Json payload, Json claims) {
    Json e;
    e["stage"] = stage;
    e["kind"] = kind;
    e["payload"] = std::move(payload);
    e["claims"] = std::move(claims);
    events_.push_back(std::move(e));
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (const Json& e : events_) out += e.dump() + "\n";
    return out;
}

Transcript Transcript::from_jsonl(const std::string& text) {
    Transcript t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            t.events_.push_back(Json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::kParseError, std::string("bad transcript line: ") + e.what());
        }
    }
    return t;
}

StageState initial_state(const Schedule& schedule) {
    StageState s;
    s.horizon = schedule.horizon;
    s.reservoir = schedule.reservoir;
    return s;
}

ColoringTransformer button_transformer(const std::vector<ButtonTriple>& buttons, Nat horizon, Color color) {
    std::map<Nat, ButtonTriple> by_x;
    for (const ButtonTriple& t : buttons) by_x.emplace(t.x, t);
    std::vector<Axiom> axioms;
    for (std::size_t i = 0; i < pair_count(horizon); ++i) {
        const Pair p = pair_at(i);
        const Nat code = static_cast<Nat>(i);
        const auto it = by_x.find(p.first);
        if (it == by_x.end() || p.second <= it->second.b) {
            axioms.push_back(Axiom{code, {}, {}, static_cast<Color>(1 - color)});
            continue;
        }
        const ButtonTriple& t = it->second;
        const std::array<Nat, 3> reads = {static_cast<Nat>(pair_index(t.a, t.b)),
                                          static_cast<Nat>(pair_index(t.a, p.second)),
                                          static_cast<Nat>(pair_index(t.b, p.second))};
        for (unsigned bits = 0; bits < 8; ++bits) {
            Axiom a{code, {}, {}, 0};
            std::array<Color, 3> v{};
            for (std::size_t k = 0; k < 3; ++k) {
                v[k] = static_cast<Color>(bits >> (2 - k) & 1u);
                (v[k] ? a.positive : a.negative).insert(reads[k]);
            }
            const bool nae = !(v[0] == v[1] && v[1] == v[2]);
            a.output = static_cast<Color>(nae == (color == 1));
            axioms.push_back(std::move(a));
        }
    }
    return ColoringTransformer(OracleFunctional(std::move(axioms)), 1);
}

namespace {

Json blocked_payload(const std::string& reason, const Condition& q) {
    return Json{{"reason", reason}, {"condition", to_json(q)}};
}

StepOutcome finish(Transcript& log, const StageState& st, OutcomeKind kind, Json payload, std::string rationale,
                   Json claims = Json::object()) {
    log.emit(st.stage, to_string(kind), payload, std::move(claims));
    return StepOutcome{kind, std::move(payload), std::move(rationale)};
}

StepOutcome blocked(Transcript& log, const StageState& st, const std::string& reason, const Condition& q) {
    return finish(log, st, OutcomeKind::kBlocked, blocked_payload(reason, q), "search failed at the working horizon");
}

Json vec_json(const std::vector<Nat>& v) { return Json(v); }

NatSet decoded(const NatSet& codes) {
    NatSet out;
    for (Nat c : codes) out.insert(c / 2);
    return out;
}

std::vector<Nat> trim_reservoir(const std::vector<Nat>& reservoir, Nat m) {
    std::vector<Nat> out;
    for (Nat x : reservoir) {
        if (x > m) out.push_back(x);
    }
    return out;
}

bool search_found(const SearchResult& r) { return r.status == SearchStatus::kFound; }

}  // namespace

StepOutcome q_step(StageState& st, const std::string& phi_id, const ColoringTransformer& phi, Mode mode,
                   Transcript& log, const Schedule& schedule) {
    const ForcingContext ctx{&phi, st.horizon, schedule.tail, schedule.node_budget};
    const Condition& p = st.condition;
    if (st.reservoir.empty()) return blocked(log, st, "empty reservoir", p);

    std::array<std::vector<Nat>, 2> can;
    for (Color j : {Color{0}, Color{1}}) {
        for (Nat x : st.reservoir) {
            const SearchResult r = force_extension(p, ctx, {Fact::limit(x, j)});
            if (r.status == SearchStatus::kBudgetExhausted) {
                return blocked(log, st, "search budget exhausted deciding the limit of " + std::to_string(x), p);
            }
            if (search_found(r)) can[j].push_back(x);
        }
    }
    for (Color j : {Color{0}, Color{1}}) {
        if (!can[j].empty()) continue;
        const NatSet tail(st.reservoir.begin(), st.reservoir.end());
        st.family.push_back(ReservedSet{phi_id, tail, static_cast<Color>(1 - j)});
        Json payload{{"phi", phi_id},     {"j", j},        {"color", 1 - j},
                     {"set", to_json(tail)}, {"condition", to_json(p)}};
        return finish(log, st, OutcomeKind::kReservedSetAdded, std::move(payload),
                      "no extension forces the limit " + std::to_string(j) + " on the reservoir",
                      Json{{"limit_homogeneous_color", 1 - j}});
    }

    const bool increasing = mode == Mode::kSIPT;
    std::array<NatSet, 2> seg = {st.segment(phi_id, 0), st.segment(phi_id, 1)};
    for (Nat x00 : can[0]) {
        for (Nat x01 : can[0]) {
            if (increasing && x01 <= x00) continue;
            for (Nat x10 : can[1]) {
                for (Nat x11 : can[1]) {
                    if (increasing && x11 <= x10) continue;
                    const std::array<std::array<Nat, 2>, 2> xs = {{{x00, x01}, {x10, x11}}};
                    std::vector<Fact> facts;
                    for (Color j : {Color{0}, Color{1}}) {
                        facts.push_back(Fact::limit(xs[j][0], j));
                        facts.push_back(Fact::limit(xs[j][1], j));
                    }
                    for (Color j : {Color{0}, Color{1}}) {
                        NatSet left = JoinedSet(seg[j]).left();
                        NatSet right = JoinedSet(seg[j]).right();
                        left.insert(xs[j][0]);
                        right.insert(xs[j][1]);
                        for (Nat l : left) {
                            for (Nat r : right) {
                                if (l == r || (increasing && r < l)) continue;
                                facts.push_back(Fact::value(l, r, j));
                            }
                        }
                    }
                    const SearchResult r = force_extension(p, ctx, facts);
                    if (r.status == SearchStatus::kBudgetExhausted) {
                        return blocked(log, st, "search budget exhausted on the four-element extension", p);
                    }
                    if (!search_found(r)) continue;

                    const Condition next = *r.condition;
                    Nat m = 0;
                    Json limits = Json::array();
                    for (Color j : {Color{0}, Color{1}}) {
                        seg[j].insert(2 * xs[j][0]);
                        seg[j].insert(2 * xs[j][1] + 1);
                        for (Nat e : decoded(seg[j])) {
                            const auto stab = stabilization(next, ctx, e, j);
                            m = std::max(m, stab.value_or(st.horizon));
                            limits.push_back(Json{e, j, stab ? Json(*stab) : Json(nullptr)});
                        }
                        m = std::max({m, xs[j][0], xs[j][1]});
                    }
                    st.condition = next;
                    st.segment(phi_id, 0) = seg[0];
                    st.segment(phi_id, 1) = seg[1];
                    st.reservoir = trim_reservoir(st.reservoir, m);
                    Json payload{{"phi", phi_id},
                                 {"mode", to_string(mode)},
                                 {"x", Json{{x00, x01}, {x10, x11}}},
                                 {"segments", Json{to_json(seg[0]), to_json(seg[1])}},
                                 {"reservoir", vec_json(st.reservoir)},
                                 {"condition", to_json(next)}};
                    Json claims{{"limits", limits}, {"cut", m}};
                    return finish(log, st, OutcomeKind::kExtendedSegments, std::move(payload),
                                  "both segments gain one left and one right element", std::move(claims));
                }
            }
        }
    }
    return blocked(log, st, "no four-element extension found", p);
}

namespace {

// Shared state of a tree walk for one requirement stage.
class Walker {
public:
    Walker(StageState& st, const WalkParams& wp, Transcript& log, Arity arity)
        : st_(st), wp_(wp), log_(log), arity_(arity), ctx_{wp.phi, st.horizon, wp.tail, wp.node_budget},
          entry_(st.condition), q_(st.condition) {}

    // Builds and labels the tree. Returns an outcome when the stage ends here.
    std::optional<StepOutcome> prepare() {
        TreeParams tp;
        tp.k = q_.length();
        tp.gamma = *wp_.functional;
        tp.h = st_.segment(wp_.phi_id, wp_.color);
        tp.reservoir = st_.reservoir;
        tp.arity = arity_;
        tp.variant = variant(wp_.mode);
        tp.depth_cap = wp_.depth_cap;
        LabeledTree tree;
        try {
            tree = build_tree(tp);
        } catch (const Error& e) {
            return blocked(log_, st_, std::string("tree construction failed: ") + e.what(), q_);
        }
        if (const auto path = depth_exhausted_path(tree)) {
            st_.reservoir = *path;
            Json payload{{"phi", wp_.phi_id},
                         {"path", vec_json(*path)},
                         {"reservoir", vec_json(st_.reservoir)},
                         {"tree_nodes", tree.size()},
                         {"condition", to_json(q_)}};
            return finish(log_, st_, OutcomeKind::kPathReservoir, std::move(payload),
                          "a maximal path survives to the depth cap; its range becomes the reservoir");
        }
        tree_ = labeled_subtree(label_tree(std::move(tree), wp_.theta), wp_.theta);
        if (arity_ == Arity::kThree) tree_ = compute_sort(std::move(tree_), wp_.theta);
        return std::nullopt;
    }

    const TreeNode& node() const { return tree_.at(alpha_); }
    const Condition& condition() const { return q_; }
    const Path& alpha() const { return alpha_; }
    LabeledTree& tree() { return tree_; }
    const ForcingContext& ctx() const { return ctx_; }
    Nat length() const { return q_.length(); }

    // Largest stabilization point over ran(α) of the walk color.
    Nat threshold() const {
        Nat m = 0;
        for (Nat x : alpha_) {
            if (const auto s = stabilization(q_, ctx_, x, wp_.color)) m = std::max(m, *s);
        }
        return m;
    }

    SearchResult search(const std::vector<Fact>& facts, const Condition& from) const {
        return force_extension(from, ctx_, facts);
    }

    void advance(Nat x, Condition next, const std::string& case_name, Json extra = Json::object()) {
        q_ = std::move(next);
        alpha_.push_back(x);
        Json payload{{"case", case_name}, {"node", vec_json(alpha_)}, {"x", x}, {"j", wp_.color},
                     {"condition", to_json(q_)}};
        for (auto it = extra.begin(); it != extra.end(); ++it) payload[it.key()] = it.value();
        Json claims = Json::object();
        if (!pressed_.empty()) claims["pressed"] = pressed_json();
        if (!diagonal_.empty()) claims["not_all_equal"] = diag_json();
        log_.emit(st_.stage, "walk-step", std::move(payload), std::move(claims));
    }

    void diagonalize(Nat a, Nat b, const std::string& where) {
        diagonal_.push_back(Pair::of(a, b));
        log_.emit(st_.stage, "diagonalize",
                  Json{{"case", where}, {"a", a}, {"b", b}, {"condition", to_json(q_)}},
                  Json{{"not_all_equal", Json{{a, b}}}});
    }

    void set_condition(Condition q) { q_ = std::move(q); }

    // Raises the limit point of `x` past `beyond` when it is committed at or
    // below it. Returns false when the rebased condition leaves the stage entry.
    bool rebase(Nat x, Nat beyond, Condition& r, std::optional<Json>& event) const {
        if (x >= r.length()) return true;
        const Limit old = *r.limit(x);
        if (old.point > beyond) return true;
        r.set_limit(x, Limit{old.color, beyond + 1});
        const bool ok = prolongs(r, entry_);
        event = Json{{"element", x},
                     {"color", old.color},
                     {"old_point", old.point},
                     {"new_point", beyond + 1},
                     {"condition", to_json(r)}};
        return ok;
    }

    void log_rebase(Json event) {
        log_.emit(st_.stage, "rebase", std::move(event), Json{{"extends_stage_entry", true}});
    }

    void record_press(const ButtonTriple& t) { pressed_.push_back(t); }

    Json pressed_json() const {
        Json out = Json::array();
        for (const ButtonTriple& t : pressed_) out.push_back(Json{t.x, t.a, t.b});
        return out;
    }

    Json diag_json() const {
        Json out = Json::array();
        for (const Pair& p : diagonal_) out.push_back(Json{p.first, p.second});
        return out;
    }

    // Terminal node reached: extend the segment, trim the reservoir.
    StepOutcome complete(const std::string& functional_id) {
        const TreeNode& n = node();
        const Witness& w = *n.witness;
        NatSet& seg = st_.segment(wp_.phi_id, wp_.color);
        const NatSet before = seg;
        NatSet oracle = seg;
        const NatSet joined = w.joined();
        oracle.insert(joined.begin(), joined.end());
        Nat use = 0;
        for (std::size_t p = 0; p < w.values.size(); ++p) {
            const Nat v = w.values[p];
            const Nat input = query_input(variant(wp_.mode), p, v);
            const Evaluation e = wp_.functional->evaluate(oracle, input);
            if (e.axiom) use = std::max(use, wp_.functional->axioms()[*e.axiom].use().value_or(0));
        }
        seg = oracle;
        Nat cut = std::max(use, threshold());
        for (Nat e : decoded(seg)) cut = std::max(cut, e);
        st_.reservoir = trim_reservoir(st_.reservoir, cut);
        st_.condition = q_;
        Json payload{{"phi", wp_.phi_id},
                     {"functional", functional_id},
                     {"j", wp_.color},
                     {"mode", to_string(wp_.mode)},
                     {"path", vec_json(alpha_)},
                     {"witness", to_json(w)},
                     {"segment_before", to_json(before)},
                     {"segment", to_json(seg)},
                     {"use", use},
                     {"reservoir", vec_json(st_.reservoir)},
                     {"condition", to_json(q_)}};
        Json claims{{"not_all_equal", diag_json()}, {"pressed", pressed_json()}};
        return finish(log_, st_, OutcomeKind::kDiagonalized, std::move(payload),
                      "terminal node reached; the computed set contains a diagonalized pair", std::move(claims));
    }

    StepOutcome reserve(const NatSet& p, const std::string& case_name) {
        const Color c = static_cast<Color>(1 - wp_.color);
        st_.family.push_back(ReservedSet{wp_.phi_id, p, c});
        st_.condition = q_;
        Json payload{{"phi", wp_.phi_id}, {"case", case_name}, {"j", wp_.color}, {"color", c},
                     {"set", to_json(p)}, {"condition", to_json(q_)}};
        return finish(log_, st_, OutcomeKind::kReservedSetAdded, std::move(payload),
                      "no candidate admits an extension forcing the walk color",
                      Json{{"limit_homogeneous_color", c}});
    }

    StepOutcome block(const std::string& reason) { return blocked(log_, st_, reason, q_); }

    std::size_t node_id() const { return *tree_.find(alpha_); }

private:
    StageState& st_;
    const WalkParams& wp_;
    Transcript& log_;
    Arity arity_;
    ForcingContext ctx_;
    Condition entry_;
    Condition q_;
    Path alpha_;
    LabeledTree tree_;
    std::vector<Pair> diagonal_;
    std::vector<ButtonTriple> pressed_;
};

bool all_children(const LabeledTree& t, const TreeNode& n, std::size_t infinities) {
    return std::all_of(n.children.begin(), n.children.end(),
                       [&](std::size_t c) { return infinity_count(*t.node(c).label) == infinities; });
}

}  // namespace

StepOutcome r_step_case_a(StageState& st, const WalkParams& wp, Transcript& log) {
    Walker w(st, wp, log, Arity::kTwo);
    if (auto early = w.prepare()) return *early;
    const Label& root = *w.node().label;
    if (infinity_count(root) == 0) {
        const SearchResult r = w.search({Fact::not_all_equal(*root[0], *root[1])}, w.condition());
        if (!search_found(r)) return w.block("no extension diagonalizes the root label");
        w.set_condition(*r.condition);
        w.diagonalize(*root[0], *root[1], "root");
    }
    while (w.node().kind != NodeKind::kWitnessTerminal) {
        const TreeNode& n = w.node();
        if (n.children.empty()) return w.block("walk stranded at " + format_path(n.path));
        const Nat m = w.threshold();
        std::vector<std::size_t> s;
        for (std::size_t c : n.children) {
            if (w.tree().node(c).path.back() >= m) s.push_back(c);
        }
        const bool transition = is_transition_node(w.tree(), w.node_id(), false);
        if (transition && all_children(w.tree(), n, 0)) {
            bool moved = false;
            for (std::size_t c : s) {
                const TreeNode& child = w.tree().node(c);
                const Nat x = child.path.back();
                const Nat a = *(*child.label)[0];
                const Nat b = *(*child.label)[1];
                if (b <= w.length()) continue;
                const SearchResult r =
                    w.search({Fact::limit(x, wp.color), Fact::not_all_equal(a, b)}, w.condition());
                if (r.status == SearchStatus::kBudgetExhausted) return w.block("search budget exhausted in A.2.2");
                if (!search_found(r)) continue;
                w.advance(x, *r.condition, "A.2.2", Json{{"label", to_json(*child.label)}});
                w.diagonalize(a, b, "A.2.2");
                moved = true;
                break;
            }
            if (!moved) return w.block("A.2.2 found no tuple and extension");
            continue;
        }
        const std::string case_name = transition ? "A.2.1" : "A.1";
        NatSet p;
        bool moved = false;
        for (std::size_t c : s) {
            const Nat x = w.tree().node(c).path.back();
            p.insert(x);
            if (moved) continue;
            const SearchResult r = w.search({Fact::limit(x, wp.color)}, w.condition());
            if (r.status == SearchStatus::kBudgetExhausted) return w.block("search budget exhausted in " + case_name);
            if (!search_found(r)) continue;
            w.advance(x, *r.condition, case_name);
            moved = true;
            break;
        }
        if (moved) continue;
        if (p.empty()) return w.block(case_name + " has no successor past the stabilization point");
        return w.reserve(p, case_name);
    }
    return w.complete(wp.functional_id);
}

namespace {

struct CaseBState {
    std::optional<std::size_t> two_inf_index;  // k: first node with exactly two ∞
    std::optional<std::size_t> one_inf_index;  // l: first node with exactly one ∞
    std::optional<Nat> x_star;
    std::optional<Nat> y_star;
    bool deferred{false};
};

}  // namespace

StepOutcome r_step_case_b(StageState& st, const WalkParams& wp, const std::vector<ButtonTriple>& buttons,
                          Transcript& log) {
    std::map<Nat, ButtonTriple> by_x;
    std::set<Nat> bs;
    for (const ButtonTriple& t : buttons) {
        if (t.a >= t.b) throw Error(ErrorCode::kInvalidArgument, "button of " + std::to_string(t.x) + " needs a < b");
        if (!by_x.emplace(t.x, t).second) {
            throw Error(ErrorCode::kInvalidArgument, "two buttons for " + std::to_string(t.x));
        }
        if (!bs.insert(t.b).second) throw Error(ErrorCode::kInvalidArgument, "button values b must be distinct");
    }
    Walker w(st, wp, log, Arity::kThree);
    if (auto early = w.prepare()) return *early;
    const bool shifted = wp.mode == Mode::kSIPT;
    CaseBState cb;

    const auto note_indices = [&](std::size_t n, std::optional<Nat> x) {
        const std::size_t inf = infinity_count(*w.node().label);
        if (inf == 2 && !cb.two_inf_index) {
            cb.two_inf_index = n;
            cb.x_star = x;
        }
        if (inf == 1 && !cb.one_inf_index) {
            cb.one_inf_index = n;
            cb.y_star = x;
        }
    };
    note_indices(0, std::nullopt);

    const Label& root = *w.node().label;
    if (root[0] && root[1]) {
        const SearchResult r = w.search({Fact::not_all_equal(*root[0], *root[1])}, w.condition());
        if (!search_found(r)) return w.block("no extension diagonalizes the root label");
        w.set_condition(*r.condition);
        w.diagonalize(*root[0], *root[1], "root");
    }

    // Column relation between u and v judged at node `at`.
    const auto related = [&](const Path& at, Nat u, Nat v, bool first_partner) {
        if (!shifted) return share_column(w.tree(), at, u, v);
        const auto conf = configuration(w.tree(), at, u, v);
        if (first_partner) return conf.contains(Configuration::kI) || conf.contains(Configuration::kII);
        return conf.contains(Configuration::kII);
    };

    while (w.node().kind != NodeKind::kWitnessTerminal) {
        const TreeNode n = w.node();
        const std::size_t depth = n.path.size();
        if (n.children.empty()) return w.block("walk stranded at " + format_path(n.path));
        const Nat m = w.threshold();
        Nat max_button = 0;
        for (Nat x : n.path) max_button = std::max(max_button, by_x.at(x).b);
        std::vector<std::size_t> s;
        for (std::size_t c : n.children) {
            const Nat x = w.tree().node(c).path.back();
            const auto it = by_x.find(x);
            if (x >= m && it != by_x.end() && it->second.b > w.length()) s.push_back(c);
        }
        const Label& lab = *n.label;
        const std::size_t inf = infinity_count(lab);
        const bool transition = is_transition_node(w.tree(), w.node_id(), true);
        const Nat len = w.length();
        const auto above = [&](Nat v) { return v > len && (n.path.empty() || v > max_button); };

        // Tries candidates in order: press the button of x plus one
        // not-all-equal pair, optionally rebasing the first element of that pair.
        struct Choice {
            std::size_t child;
            Nat pair_a;
            Nat pair_b;
        };
        const auto attempt = [&](const std::vector<Choice>& choices, const std::string& case_name, bool allow_rebase,
                                 std::optional<std::size_t>& chosen) -> std::optional<StepOutcome> {
            for (const Choice& ch : choices) {
                const TreeNode& child = w.tree().node(ch.child);
                const Nat x = child.path.back();
                const ButtonTriple& t = by_x.at(x);
                Condition from = w.condition();
                std::optional<Json> rebase_event;
                if (allow_rebase && !w.rebase(ch.pair_a, ch.pair_b, from, rebase_event)) {
                    return w.block("rebase in " + case_name + " does not extend the stage entry condition");
                }
                std::vector<Fact> facts = {Fact::not_all_equal(t.a, t.b)};
                facts.push_back(Fact::not_all_equal(ch.pair_a, ch.pair_b));
                const SearchResult r = w.search(facts, from);
                if (r.status == SearchStatus::kBudgetExhausted) return w.block("search budget exhausted in " + case_name);
                if (!search_found(r)) continue;
                if (!forces_limit(*r.condition, w.ctx(), x, wp.color)) {
                    return w.block("pressing the button of " + std::to_string(x) + " does not force its limit");
                }
                if (rebase_event) w.log_rebase(std::move(*rebase_event));
                w.record_press(t);
                w.advance(x, *r.condition, case_name,
                          Json{{"label", to_json(*child.label)}, {"pressed", Json{t.x, t.a, t.b}}});
                w.diagonalize(ch.pair_a, ch.pair_b, case_name);
                chosen = ch.child;
                return std::nullopt;
            }
            return std::nullopt;
        };
        const auto press_only = [&](const std::string& case_name) -> std::optional<StepOutcome> {
            for (std::size_t c : s) {
                const Nat x = w.tree().node(c).path.back();
                const ButtonTriple& t = by_x.at(x);
                const SearchResult r = w.search({Fact::not_all_equal(t.a, t.b)}, w.condition());
                if (r.status == SearchStatus::kBudgetExhausted) return w.block("search budget exhausted in " + case_name);
                if (!search_found(r)) continue;
                if (!forces_limit(*r.condition, w.ctx(), x, wp.color)) {
                    return w.block("pressing the button of " + std::to_string(x) + " does not force its limit");
                }
                w.record_press(t);
                w.advance(x, *r.condition, case_name, Json{{"pressed", Json{t.x, t.a, t.b}}});
                return std::nullopt;
            }
            return w.block(case_name + " found no button to press");
        };
        const auto label_of = [&](std::size_t c) -> const Label& { return *w.tree().node(c).label; };
        const auto prune_after = [&](const std::string& case_name, Nat u, Nat v, bool config_one) {
            const Path at = w.alpha();
            const std::size_t before = w.tree().size();
            w.tree() = prune(w.tree(), at, [&](const TreeNode& sigma) {
                if (!shifted) return share_column(w.tree(), sigma.path, u, v);
                const auto conf = configuration(w.tree(), sigma.path, u, v);
                return config_one ? conf.contains(Configuration::kI) : conf.contains(Configuration::kII);
            });
            log.emit(st.stage, "prune",
                     Json{{"case", case_name}, {"node", vec_json(at)}, {"u", u}, {"v", v},
                          {"removed", before - w.tree().size()}},
                     Json::object());
        };

        std::optional<std::size_t> chosen;
        if (transition && inf == 3) {
            std::vector<Choice> ch;
            for (std::size_t c : s) {
                const Label& l = label_of(c);
                if (above(*l[0]) && above(*l[1])) ch.push_back({c, *l[0], *l[1]});
            }
            if (auto out = attempt(ch, "B.2.1", false, chosen)) return *out;
            if (!chosen) return w.block("B.2.1 found no candidate");
        } else if (transition && inf == 2 && all_children(w.tree(), n, 0)) {
            std::vector<Choice> ch;
            for (std::size_t c : s) {
                const Label& l = label_of(c);
                if (above(*l[1]) && above(*l[2])) ch.push_back({c, *l[1], *l[2]});
            }
            if (auto out = attempt(ch, "B.2.2", false, chosen)) return *out;
            if (!chosen) return w.block("B.2.2 found no candidate");
        } else if (transition && inf == 2 && all_children(w.tree(), n, 1)) {
            std::vector<Choice> ch;
            for (std::size_t c : s) {
                const Label& l = label_of(c);
                if (above(*l[1])) ch.push_back({c, *l[0], *l[1]});
            }
            if (cb.two_inf_index == std::size_t{0}) {
                if (auto out = attempt(ch, "B.2.3", false, chosen)) return *out;
                if (!chosen) return w.block("B.2.3 found no candidate");
            } else {
                std::vector<Choice> sharing;
                for (const Choice& c : ch) {
                    const Path& at = w.tree().node(c.child).path;
                    if (related(at, *cb.x_star, at.back(), true)) sharing.push_back(c);
                }
                if (sharing.empty()) {
                    cb.deferred = true;
                    log.emit(st.stage, "walk-step",
                             Json{{"case", "B.2.3"}, {"deferred", true}, {"node", vec_json(n.path)}},
                             Json::object());
                    if (auto out = press_only("B.2.3-deferred")) return *out;
                } else {
                    if (auto out = attempt(sharing, "B.2.3", true, chosen)) return *out;
                    if (!chosen) return w.block("B.2.3 found no candidate in P'");
                    const Nat y = w.tree().node(*chosen).path.back();
                    prune_after("B.2.3", *cb.x_star, y, true);
                }
            }
        } else if (transition && inf == 1 && all_children(w.tree(), n, 0) && cb.deferred) {
            std::vector<Choice> ch;
            for (std::size_t c : s) {
                const Label& l = label_of(c);
                if (above(*l[2])) ch.push_back({c, *l[1], *l[2]});
            }
            std::vector<Choice> with_y;
            std::vector<Choice> with_x;
            for (const Choice& c : ch) {
                const Path& at = w.tree().node(c.child).path;
                if (cb.y_star && related(at, *cb.y_star, at.back(), false)) with_y.push_back(c);
                if (cb.x_star) {
                    const bool rel = shifted ? configuration(w.tree(), at, *cb.x_star, at.back())
                                                   .contains(Configuration::kI)
                                             : share_column(w.tree(), at, *cb.x_star, at.back());
                    if (rel) with_x.push_back(c);
                }
            }
            const bool use_y = !with_y.empty();
            const std::vector<Choice>& pool = use_y ? with_y : with_x;
            if (pool.empty()) return w.block("B.2.4 found neither P'' nor P'");
            if (auto out = attempt(pool, "B.2.4", true, chosen)) return *out;
            if (!chosen) return w.block("B.2.4 found no candidate");
            const Nat z = w.tree().node(*chosen).path.back();
            prune_after("B.2.4", use_y ? *cb.y_star : *cb.x_star, z, !use_y);
            cb.deferred = false;
        } else {
            if (auto out = press_only("B.1")) return *out;
        }
        note_indices(depth + 1, w.alpha().back());
    }
    return w.complete(wp.functional_id);
}

RunResult run_stages(const Schedule& schedule) {
    RunResult out;
    out.state = initial_state(schedule);
    for (const StepSpec& step : schedule.steps) {
        StageState& st = out.state;
        ++st.stage;
        const auto transformer = [&]() -> const ColoringTransformer& {
            const auto it = schedule.transformers.find(step.phi);
            if (it == schedule.transformers.end()) {
                throw Error(ErrorCode::kInvalidArgument, "unknown transformer '" + step.phi + "'");
            }
            return it->second;
        };
        const auto functional = [&]() -> const OracleFunctional& {
            const auto it = schedule.functionals.find(step.functional);
            if (it == schedule.functionals.end()) {
                throw Error(ErrorCode::kInvalidArgument, "unknown functional '" + step.functional + "'");
            }
            return it->second;
        };
        StepOutcome outcome;
        switch (step.kind) {
            case StepSpec::Kind::kP:
                out.transcript.emit(st.stage, "p-noop",
                                    Json{{"citation", "genericity requirement; not simulated"}}, Json::object());
                outcome = StepOutcome{OutcomeKind::kNoop, Json::object(), "genericity is not simulated"};
                break;
            case StepSpec::Kind::kQ:
                outcome = q_step(st, step.phi, transformer(), step.mode, out.transcript, schedule);
                break;
            case StepSpec::Kind::kRA:
            case StepSpec::Kind::kRB: {
                WalkParams wp;
                wp.phi_id = step.phi;
                wp.functional_id = step.functional;
                wp.phi = &transformer();
                wp.functional = &functional();
                wp.mode = step.mode;
                wp.color = step.color;
                wp.theta = step.theta;
                wp.depth_cap = step.depth_cap;
                wp.tail = schedule.tail;
                wp.node_budget = schedule.node_budget;
                outcome = step.kind == StepSpec::Kind::kRA
                              ? r_step_case_a(st, wp, out.transcript)
                              : r_step_case_b(st, wp, step.buttons, out.transcript);
                break;
            }
        }
        const bool stop = outcome.kind == OutcomeKind::kBlocked;
        out.outcomes.push_back(std::move(outcome));
        if (stop) {
            out.halted = true;
            break;
        }
    }
    return out;
}

}  // namespace ramseylab
