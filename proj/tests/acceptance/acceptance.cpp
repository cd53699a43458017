// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ramseylab/construction.hpp"
#include "ramseylab/halting.hpp"
#include "ramseylab/io.hpp"
#include "ramseylab/reduction.hpp"
#include "ramseylab/transcript.hpp"

using namespace ramseylab;

namespace {

struct Tally {
    std::size_t checks{0};
    std::size_t failures{0};
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

int g_failed = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    const bool in_time = s < limit_s;
    const bool pass = o.pass && in_time;
    line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " (" << s << " s, limit "
         << limit_s << " s)";
    if (o.pass && !in_time) line << " over time limit";
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failed;
}

std::string summary(const Tally& t) {
    std::string s = std::to_string(t.checks) + " checks, " + std::to_string(t.failures) + " failures";
    if (t.failures) s += "; first: " + t.first_failure;
    return s;
}

int as_int(oracle::Outcome o) { return static_cast<int>(o); }
int as_int(Verdict v) {
    switch (v) {
        case Verdict::kHolds: return as_int(oracle::Outcome::kHolds);
        case Verdict::kFails: return as_int(oracle::Outcome::kFails);
        case Verdict::kVacuous: return as_int(oracle::Outcome::kVacuous);
    }
    return -1;
}

NatSet mask_set(std::uint64_t mask, Nat n) {
    NatSet s;
    for (Nat x = 0; x < n; ++x) {
        if (mask >> x & 1u) s.insert(x);
    }
    return s;
}

// ---------------------------------------------------------------------------

Outcome homogeneity() {
    Tally t;
    std::size_t joined = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Coloring f = random_stable_coloring(seed, 8, seed % 8);
        for (std::uint64_t m = 0; m < 256; ++m) {
            const NatSet h = mask_set(m, 8);
            const auto got = check_homogeneity(f, h, HomogeneityKind::kHomogeneous);
            const auto want = oracle::homogeneous(f, h);
            t.expect(as_int(got.verdict) == as_int(want.outcome) && got.color == want.color,
                     [&] { return "homogeneous, seed " + std::to_string(seed) + " mask " + std::to_string(m); });
            const auto lgot = check_homogeneity(f, h, HomogeneityKind::kLimitHomogeneous);
            const auto lwant = oracle::limit_homogeneous(f, h);
            t.expect(as_int(lgot.verdict) == as_int(lwant.outcome) && lgot.color == lwant.color,
                     [&] { return "limit, seed " + std::to_string(seed) + " mask " + std::to_string(m); });
        }
        for (std::uint64_t m = 0; m < (1u << 16); ++m) {
            if (std::popcount(m) > 6) continue;
            ++joined;
            const NatSet codes = mask_set(m, 16);
            const JoinedSet z(codes);
            for (bool inc : {false, true}) {
                const auto got = check_homogeneity(
                    f, z, inc ? HomogeneityKind::kIncreasingPHomogeneous : HomogeneityKind::kPHomogeneous);
                const auto want = oracle::p_homogeneous(f, codes, inc);
                t.expect(as_int(got.verdict) == as_int(want.outcome) && got.color == want.color, [&] {
                    return std::string(inc ? "increasing " : "") + "p-homogeneous, seed " + std::to_string(seed) +
                           " codes mask " + std::to_string(m);
                });
            }
        }
    }
    return {t.failures == 0, "100 colorings, 256 subsets and " + std::to_string(joined / 100) +
                                 " joined sets each; " + summary(t)};
}

// ---------------------------------------------------------------------------

Outcome reductions() {
    Tally t;
    std::mt19937_64 rng(2024);
    std::size_t nonvacuous = 0;
    for (int c = 0; c < 500; ++c) {
        const Nat n = 12 + static_cast<Nat>(rng() % 29);
        const Nat stab = 1 + static_cast<Nat>(rng() % 10);
        const Coloring f = random_stable_coloring(rng(), n, stab);
        const Color col = static_cast<Color>(rng() % 2);
        const auto where = [&] { return "case " + std::to_string(c); };

        // Limit homogeneous input.
        NatSet l;
        for (Nat x = 0; x < n; ++x) {
            if (f.limit(x)->color == col && rng() % 3 != 0) l.insert(x);
        }
        t.expect(oracle::limit_homogeneous(f, l).outcome != oracle::Outcome::kFails, where);
        const GreedyHomogeneous g = limit_to_homogeneous(f, l, col);
        const NatSet h(g.elements.begin(), g.elements.end());
        const auto hv = oracle::homogeneous(f, h);
        t.expect(hv.outcome != oracle::Outcome::kFails && (!hv.color || *hv.color == col),
                 [&] { return where() + ": limit thinning"; });
        t.expect(check_homogeneity(f, h, HomogeneityKind::kHomogeneous).verdict != Verdict::kFails, where);
        nonvacuous += hv.outcome == oracle::Outcome::kHolds;

        // Increasing p-homogeneous input: left column from rows with limit col,
        // right column filtered, with one element past every stabilization point.
        NatSet left;
        for (Nat x = 0; x < n - 1; ++x) {
            if (f.limit(x)->color == col && rng() % 2) left.insert(x);
        }
        if (left.empty()) continue;
        NatSet right;
        for (Nat y = 0; y < n; ++y) {
            bool ok = true;
            for (Nat x : left) ok = ok && (x >= y || f.at(x, y) == col);
            if (ok && (rng() % 2 || y + 1 == n)) right.insert(y);
        }
        const JoinedSet z = JoinedSet::encode(left, right);
        t.expect(oracle::p_homogeneous(f, z.codes(), true).outcome == oracle::Outcome::kHolds,
                 [&] { return where() + ": generated input is not increasing p-homogeneous"; });
        const IptReduction ipt = ipt_to_homogeneous(f, z);
        const NatSet hh(ipt.homogeneous.elements.begin(), ipt.homogeneous.elements.end());
        const auto iv = oracle::homogeneous(f, hh);
        t.expect(ipt.color == col && iv.outcome != oracle::Outcome::kFails && (!iv.color || *iv.color == col),
                 [&] { return where() + ": ipt reduction"; });
        nonvacuous += iv.outcome == oracle::Outcome::kHolds;

        // Forward chain from the homogeneous set and from the joined set.
        const NatSet spt = forward_chain(Principle::kSRT, Principle::kSPT, h);
        if (h.size() >= 2) {
            t.expect(is_solution(f, Principle::kSPT, spt) &&
                         oracle::p_homogeneous(f, spt, false).outcome == oracle::Outcome::kHolds,
                     [&] { return where() + ": SRT to SPT"; });
            const NatSet sipt = forward_chain(Principle::kSRT, Principle::kSIPT, h);
            t.expect(oracle::p_homogeneous(f, sipt, true).outcome == oracle::Outcome::kHolds,
                     [&] { return where() + ": SRT to SIPT"; });
            t.expect(oracle::limit_homogeneous(f, forward_chain(Principle::kSRT, Principle::kD, h)).outcome ==
                         oracle::Outcome::kHolds,
                     [&] { return where() + ": SRT to D"; });
        }
        const NatSet d = forward_chain(Principle::kSIPT, Principle::kD, z.codes());
        t.expect(d == left && oracle::limit_homogeneous(f, d).outcome == oracle::Outcome::kHolds,
                 [&] { return where() + ": SIPT to D"; });
    }
    return {t.failures == 0, "500 colorings; " + std::to_string(nonvacuous) + " non-vacuous outputs; " + summary(t)};
}

// ---------------------------------------------------------------------------

Outcome halting_round_trip() {
    Tally t;
    std::mt19937_64 rng(77);
    std::size_t sets = 0;
    std::size_t rows = 0;
    for (int a_i = 0; a_i < 50; ++a_i) {
        const Nat domain = 1 + static_cast<Nat>(rng() % 20);
        const std::size_t stages = 1 + rng() % 30;
        std::vector<NatSet> st{NatSet{}};
        for (std::size_t s = 1; s < stages; ++s) {
            NatSet next = st.back();
            if (rng() % 3 == 0) next.insert(static_cast<Nat>(rng() % domain));
            st.push_back(next);
        }
        const CEApproximation a(domain, st);
        const Nat horizon = 60;
        const Coloring f = build_coding_coloring(a, horizon);
        t.expect(f.violations().empty(), [&] { return "coding coloring violates invariants"; });
        for (Nat x = 0; x < horizon; ++x) {
            ++rows;
            const auto& l = f.limit(x);
            bool ok = l.has_value() && l->color == 1;
            for (Nat u = x + 1; ok && u < horizon; ++u) ok = u < l->point || f.at(x, u) == 1;
            t.expect(ok, [&] { return "row " + std::to_string(x) + " does not converge to 1"; });
        }
        std::size_t made = 0;
        for (int tries = 0; made < 200 && tries < 20000; ++tries) {
            NatSet left;
            const Nat top = std::min<Nat>(25, horizon - 1);
            for (Nat x = 0; x <= top; ++x) {
                if (rng() % 4 == 0) left.insert(x);
            }
            left.insert(domain - 1 + static_cast<Nat>(rng() % 3));
            NatSet right;
            Nat need = 0;
            for (Nat x : left) need = std::max(need, x + a.modulus_envelope(x) + 1);
            if (need >= horizon) continue;
            for (Nat y = 0; y < horizon; ++y) {
                bool ok = true;
                for (Nat x : left) ok = ok && (x >= y || y - x > a.modulus_envelope(x));
                if (ok && (rng() % 3 == 0 || y == need)) right.insert(y);
            }
            const JoinedSet z = JoinedSet::encode(left, right);
            const auto v = oracle::p_homogeneous(f, z.codes(), true);
            if (v.outcome != oracle::Outcome::kHolds || v.color != Color{1}) {
                t.expect(false, [&] { return "generated set is not increasing p-homogeneous with color 1"; });
                continue;
            }
            ++made;
            for (Nat q = 0; q < domain; ++q) {
                const bool got = decode_membership(a, z, q);
                t.expect(got == a.final_set().contains(q),
                         [&] { return "approximation " + std::to_string(a_i) + " z=" + std::to_string(q); });
            }
        }
        sets += made;
        t.expect(made >= 200, [&] { return "only " + std::to_string(made) + " solutions generated"; });
    }
    return {t.failures == 0, "50 approximations, " + std::to_string(sets) + " solutions, " + std::to_string(rows) +
                                 " rows; " + summary(t)};
}

// ---------------------------------------------------------------------------

struct TreeCorpus {
    std::vector<TreeParams> params;
};

const TreeCorpus& tree_corpus() {
    static const TreeCorpus corpus = [] {
        TreeCorpus c;
        std::mt19937_64 rng(4242);
        for (Arity ar : {Arity::kTwo, Arity::kThree}) {
            for (ParityVariant v : {ParityVariant::kPlain, ParityVariant::kShifted}) {
                for (int i = 0; i < 120; ++i) {
                    const Nat cap = 1 + static_cast<Nat>(rng() % 4);
                    c.params.push_back(oracle::random_tree_params(rng, ar, v, i % 3 != 0, 6, cap));
                }
            }
        }
        return c;
    }();
    return corpus;
}

Outcome tree_labeling() {
    Tally t;
    std::size_t nodes = 0;
    std::size_t labeled_trees = 0;
    std::size_t terminals = 0;
    for (std::size_t i = 0; i < tree_corpus().params.size(); ++i) {
        const TreeParams& p = tree_corpus().params[i];
        const auto where = [&] { return "tree " + std::to_string(i); };
        const LabeledTree tree = build_tree(p);
        const auto brute = oracle::brute_tree(p);
        t.expect(tree.size() == brute.size(), [&] { return where() + ": node count"; });
        for (const TreeNode& n : tree.nodes()) {
            ++nodes;
            const auto it = brute.find(n.path);
            t.expect(it != brute.end() && it->second == n.kind,
                     [&] { return where() + ": node " + format_path(n.path); });
            if (n.kind != NodeKind::kWitnessTerminal) continue;
            ++terminals;
            const auto least = oracle::least_witness_values(p, NatSet(n.path.begin(), n.path.end()));
            t.expect(n.witness && oracle::witness_holds(p, *n.witness) && least == n.witness->values,
                     [&] { return where() + ": witness at " + format_path(n.path); });
        }
        if (depth_exhausted_path(tree)) continue;
        ++labeled_trees;
        const LabeledTree lt = label_tree(tree);
        for (const TreeNode& n : lt.nodes()) {
            std::string why;
            t.expect(n.label && oracle::label_well_formed(*n.label, p.k, &why),
                     [&] { return where() + ": label at " + format_path(n.path) + ": " + why; });
            if (n.kind == NodeKind::kWitnessTerminal) {
                t.expect(*n.label == Label(n.witness->values.begin(), n.witness->values.end()),
                         [&] { return where() + ": terminal label at " + format_path(n.path); });
            }
        }
    }
    const bool enough = labeled_trees >= tree_corpus().params.size() / 3;
    return {t.failures == 0 && enough,
            std::to_string(tree_corpus().params.size()) + " trees (" + std::to_string(labeled_trees) +
                " labelable), " + std::to_string(nodes) + " nodes, " + std::to_string(terminals) + " terminals; " +
                summary(t)};
}

Outcome labeled_subtrees() {
    Tally t;
    std::size_t kept = 0;
    std::size_t transitions = 0;
    for (std::size_t i = 0; i < tree_corpus().params.size(); ++i) {
        const TreeParams& p = tree_corpus().params[i];
        const LabeledTree tree = build_tree(p);
        if (depth_exhausted_path(tree)) continue;
        for (Threshold theta : {Threshold{}, Threshold{1}, Threshold{2}}) {
            const LabeledTree lt = label_tree(tree, theta);
            const LabeledTree sub = labeled_subtree(lt, theta);
            const auto where = [&] { return "tree " + std::to_string(i); };
            for (const TreeNode& n : sub.nodes()) {
                ++kept;
                const auto in_t = lt.find(n.path);
                t.expect(in_t && lt.node(*in_t).label == n.label,
                         [&] { return where() + ": label changed at " + format_path(n.path); });
                if (in_t && lt.node(*in_t).kind == NodeKind::kWitnessTerminal) {
                    t.expect(n.children.empty() && n.kind == NodeKind::kWitnessTerminal,
                             [&] { return where() + ": terminal lost at " + format_path(n.path); });
                }
            }
            const auto loose = transition_nodes(sub, false);
            for (const Path& a : transition_nodes(sub, true)) {
                ++transitions;
                t.expect(std::find(loose.begin(), loose.end(), a) != loose.end(),
                         [&] { return where() + ": revised transition " + format_path(a); });
            }
        }
    }
    return {t.failures == 0, std::to_string(kept) + " retained nodes over three thresholds, " +
                                 std::to_string(transitions) + " revised transitions; " + summary(t)};
}

// ---------------------------------------------------------------------------

Outcome forcing_algebra() {
    Tally t;
    std::mt19937_64 rng(99);
    std::size_t presses = 0;
    std::size_t blocked = 0;
    for (int c = 0; c < 1000; ++c) {
        const auto where = [&] { return "case " + std::to_string(c); };
        const Nat n = static_cast<Nat>(rng() % 13);
        const Condition p = oracle::random_condition(rng, n);
        const Condition q = oracle::random_extension(rng, p, std::min<Nat>(12, n + static_cast<Nat>(rng() % 4)));
        const Condition r = oracle::random_extension(rng, q, std::min<Nat>(12, q.length() + static_cast<Nat>(rng() % 4)));
        const Condition other = oracle::random_condition(rng, static_cast<Nat>(rng() % 13));
        // Partial order.
        t.expect(extends(p, p), where);
        t.expect(extends(q, p) && extends(r, q) && extends(r, p), where);
        t.expect(!(extends(other, p) && extends(p, other)) || other == p, where);
        t.expect(!(extends(other, q) && extends(q, p)) || extends(other, p), where);
        t.expect(extends(other, p) == oracle::prolongs(other, p), where);
        // Restriction.
        for (Nat m = 0; m <= r.length(); ++m) {
            const Condition s = r.restrict(m);
            t.expect(validate_condition(s).ok() && extends(r, s), where);
        }
        t.expect(r.restrict(p.length()) == p, where);
        // Press persistence.
        if (n >= 2) {
            const Nat b = 1 + static_cast<Nat>(rng() % (n - 1));
            const ButtonTriple tr{0, static_cast<Nat>(rng() % b), b};
            if (press_check(p, tr)) t.expect(press_check(q, tr) && press_check(r, tr), where);
        }
        // Pressing postconditions, with exhaustive confirmation for short conditions.
        const Nat b = 1 + static_cast<Nat>(rng() % 6);
        const ButtonTriple tr{0, static_cast<Nat>(rng() % b), b};
        const Condition base = oracle::random_condition(rng, static_cast<Nat>(rng() % (b + 1)));
        const Nat target = b + 1;
        const std::optional<bool> possible =
            target <= 6 ? std::optional<bool>(oracle::press_possible(base, tr, target)) : std::nullopt;
        try {
            const Condition e = extend_pressing(base, tr, target);
            ++presses;
            t.expect(e.length() == target && validate_condition(e).ok() && extends(e, base) && press_check(e, tr),
                     [&] { return where() + ": pressing postconditions"; });
            t.expect(possible.value_or(true), [&] { return where() + ": pressed where exhaustive search finds none"; });
        } catch (const Error& e) {
            t.expect(e.code() == ErrorCode::kPressBlocked, [&] { return where() + ": " + e.what(); });
            ++blocked;
            t.expect(!possible.value_or(false),
                     [&] { return where() + ": blocked although a pressing extension exists"; });
        }
    }
    return {t.failures == 0, "1000 cases, " + std::to_string(presses) + " presses, " + std::to_string(blocked) +
                                 " blocked; " + summary(t)};
}

// ---------------------------------------------------------------------------

Outcome construction_corpus() {
    Tally t;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(std::string(RAMSEYLAB_TEST_DATA) + "/construction")) {
        if (e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::set<std::string> cases;
    std::set<std::string> outcomes;
    std::size_t events = 0;
    std::size_t checks = 0;
    for (const auto& f : files) {
        const std::string name = f.stem().string();
        const Schedule s = schedule_from_json(read_json_file(f));
        const RunResult r = run_stages(s);
        const ReplayReport rep = verify_transcript(s, r.transcript, true);
        events += rep.events;
        for (const auto& [k, v] : rep.checks) checks += v;
        t.expect(rep.deterministic, [&] { return name + ": rerun differs"; });
        for (const ReplayIssue& i : rep.issues) {
            t.expect(false, [&] { return name + ": " + i.check + ": " + i.message; });
        }
        t.expect(!r.halted, [&] { return name + ": halted"; });
        for (const Json& e : r.transcript.events()) {
            outcomes.insert(e["kind"].get<std::string>());
            if (e["payload"].contains("case")) cases.insert(e["payload"]["case"].get<std::string>());
        }
    }
    t.expect(files.size() >= 10, [&] { return "only " + std::to_string(files.size()) + " schedules"; });
    for (const char* c : {"A.1", "A.2.1", "A.2.2", "B.1", "B.2.1", "B.2.2", "B.2.3", "B.2.4"}) {
        t.expect(cases.contains(c), [&] { return std::string("case ") + c + " not reached"; });
    }
    for (const char* o : {"path-reservoir", "reserved-set-added", "diagonalized", "extended-segments"}) {
        t.expect(outcomes.contains(o), [&] { return std::string("outcome ") + o + " not reached"; });
    }
    return {t.failures == 0, std::to_string(files.size()) + " schedules, " + std::to_string(events) + " events, " +
                                 std::to_string(checks) + " replayed predicates, " + std::to_string(cases.size()) +
                                 " walk cases; " + summary(t)};
}

}  // namespace

int main() {
    criterion(1, "homogeneity checks agree with the definitional brute force", 60, homogeneity);
    criterion(2, "reductions map solutions to solutions", 120, reductions);
    criterion(3, "halting coding round trip", 180, halting_round_trip);
    criterion(4, "tree membership, witnesses and labels agree with the brute force", 300, tree_labeling);
    criterion(5, "labeled subtrees keep labels and terminals; revised transitions are transitions", 300,
              labeled_subtrees);
    criterion(6, "forcing algebra and button pressing", 300, forcing_algebra);
    criterion(7, "construction transcripts replay-verify and rerun identically", 120, construction_corpus);
    std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << std::endl;
    return g_failed == 0 ? 0 : 1;
}
