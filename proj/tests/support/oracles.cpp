#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using namespace ramseylab;

namespace {

Verdict from_colors(const std::set<Color>& seen) {
    if (seen.empty()) return {Outcome::kVacuous, std::nullopt};
    if (seen.size() == 1) return {Outcome::kHolds, *seen.begin()};
    return {Outcome::kFails, std::nullopt};
}

std::vector<Nat> as_vector(const NatSet& s) { return {s.begin(), s.end()}; }

// Subsets of v by bitmask.
NatSet subset(const std::vector<Nat>& v, std::uint64_t mask) {
    NatSet out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1u) out.insert(v[i]);
    }
    return out;
}

Nat input_for(ParityVariant variant, std::size_t position, Nat v) {
    if (variant == ParityVariant::kPlain) return v;
    // Positions 0 and 2 read odd inputs, position 1 an even one.
    return position == 1 ? 2 * v : 2 * v + 1;
}

// All increasing tuples of the given length from [lo, hi), in lexicographic order.
void tuples(Nat lo, Nat hi, std::size_t len, std::vector<Nat>& cur, std::vector<std::vector<Nat>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (Nat v = cur.empty() ? lo : cur.back() + 1; v < hi; ++v) {
        cur.push_back(v);
        tuples(lo, hi, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Verdict homogeneous(const Coloring& f, const NatSet& h) {
    std::set<Color> seen;
    for (Nat x : h) {
        for (Nat y : h) {
            if (x < y) seen.insert(f.at(x, y));
        }
    }
    return from_colors(seen);
}

Verdict limit_homogeneous(const Coloring& f, const NatSet& h) {
    std::set<Color> seen;
    for (Nat x : h) seen.insert(f.limit(x)->color);
    return from_colors(seen);
}

Verdict p_homogeneous(const Coloring& f, const NatSet& codes, bool increasing) {
    std::set<Color> seen;
    for (Nat a : codes) {
        for (Nat b : codes) {
            if (a % 2 != 0 || b % 2 != 1) continue;
            const Nat x = a / 2;
            const Nat y = b / 2;
            if (x == y || (increasing && !(x < y))) continue;
            seen.insert(f.at(std::min(x, y), std::max(x, y)));
        }
    }
    return from_colors(seen);
}

std::optional<Color> evaluate(const std::vector<Axiom>& axioms, const NatSet& oracle, Nat n) {
    for (const Axiom& a : axioms) {
        if (a.input != n) continue;
        bool fires = true;
        for (Nat q : a.positive) fires = fires && oracle.contains(q);
        for (Nat q : a.negative) fires = fires && !oracle.contains(q);
        if (fires) return a.output;
    }
    return std::nullopt;
}

std::optional<std::vector<Nat>> least_witness_values(const TreeParams& p, const NatSet& range) {
    const std::size_t arity = p.arity == Arity::kTwo ? 2 : 3;
    Nat max_input = 0;
    for (const Axiom& a : p.gamma.axioms()) max_input = std::max(max_input, a.input);
    std::vector<std::vector<Nat>> all;
    std::vector<Nat> cur;
    tuples(p.k, max_input + 1, arity, cur, all);
    const std::vector<Nat> r = as_vector(range);
    std::optional<std::vector<Nat>> best;
    for (std::uint64_t ml = 0; ml < (std::uint64_t{1} << r.size()); ++ml) {
        for (std::uint64_t mr = 0; mr < (std::uint64_t{1} << r.size()); ++mr) {
            NatSet oracle = p.h;
            for (Nat x : subset(r, ml)) oracle.insert(2 * x);
            for (Nat y : subset(r, mr)) oracle.insert(2 * y + 1);
            NatSet ones;
            for (Nat n = 0; n <= max_input; ++n) {
                if (evaluate(p.gamma.axioms(), oracle, n) == Color{1}) ones.insert(n);
            }
            if (ones.size() < (p.variant == ParityVariant::kPlain ? arity : 1)) continue;
            for (const std::vector<Nat>& t : all) {
                if (best && !(t < *best)) break;
                bool ok = true;
                for (std::size_t i = 0; i < arity && ok; ++i) ok = ones.contains(input_for(p.variant, i, t[i]));
                if (ok) {
                    best = t;
                    break;
                }
            }
        }
    }
    return best;
}

bool witness_holds(const TreeParams& p, const Witness& w) {
    NatSet oracle = p.h;
    for (Nat x : w.left) oracle.insert(2 * x);
    for (Nat y : w.right) oracle.insert(2 * y + 1);
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (w.values[i] < p.k) return false;
        if (i > 0 && w.values[i] <= w.values[i - 1]) return false;
        if (evaluate(p.gamma.axioms(), oracle, input_for(p.variant, i, w.values[i])) != Color{1}) return false;
    }
    return true;
}

std::map<Path, NodeKind> brute_tree(const TreeParams& p) {
    std::map<NatSet, bool> cache;
    const auto has_witness = [&](const Path& a) {
        const NatSet range(a.begin(), a.end());
        const auto it = cache.find(range);
        if (it != cache.end()) return it->second;
        return cache[range] = least_witness_values(p, range).has_value();
    };
    std::map<Path, NodeKind> out;
    // Breadth-first over all increasing strings; a string is a node iff its
    // parent is a node without a witness over the parent's range.
    std::vector<Path> frontier = {Path{}};
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& a : frontier) {
            NodeKind kind = NodeKind::kInternal;
            const bool more = std::any_of(p.reservoir.begin(), p.reservoir.end(),
                                          [&](Nat x) { return a.empty() || x > a.back(); });
            if (has_witness(a)) {
                kind = NodeKind::kWitnessTerminal;
            } else if (a.size() >= p.depth_cap || !more) {
                kind = NodeKind::kDepthExhausted;
            }
            out[a] = kind;
            if (kind != NodeKind::kInternal) continue;
            for (Nat x : p.reservoir) {
                if (a.empty() || x > a.back()) {
                    Path b = a;
                    b.push_back(x);
                    next.push_back(std::move(b));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

bool label_well_formed(const Label& label, Nat k, std::string* why) {
    const auto fail = [&](const char* msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    bool seen_inf = false;
    std::optional<Nat> prev;
    for (const LabelEntry& e : label) {
        if (!e) {
            seen_inf = true;
            continue;
        }
        if (seen_inf) return fail("finite entry after an infinite one");
        if (*e < k) return fail("finite entry below k");
        if (prev && *e <= *prev) return fail("finite entries do not increase");
        prev = e;
    }
    return true;
}

bool valid(const Condition& q) {
    const Nat n = q.length();
    for (Nat x = 0; x < n; ++x) {
        const auto& l = q.limit(x);
        if (!l) return false;
        for (Nat y = x + 1; y < n; ++y) {
            if (y >= l->point && q.sigma(x, y) != l->color) return false;
        }
    }
    return true;
}

bool prolongs(const Condition& q, const Condition& p) {
    if (q.length() < p.length()) return false;
    for (Nat x = 0; x < p.length(); ++x) {
        if (q.limit(x) != p.limit(x)) return false;
        for (Nat y = x + 1; y < p.length(); ++y) {
            if (q.sigma(x, y) != p.sigma(x, y)) return false;
        }
    }
    return true;
}

Condition random_condition(std::mt19937_64& rng, Nat n) { return random_extension(rng, Condition(0), n); }

Condition random_extension(std::mt19937_64& rng, const Condition& p, Nat n) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<Nat> point(0, n + 2);
    Condition q(n);
    for (Nat x = 0; x < n; ++x) {
        if (x < p.length()) {
            q.set_limit(x, *p.limit(x));
        } else {
            q.set_limit(x, Limit{static_cast<Color>(bit(rng)), point(rng)});
        }
    }
    for (Nat y = 1; y < n; ++y) {
        for (Nat x = 0; x < y; ++x) {
            if (y < p.length()) {
                q.set_sigma(x, y, p.sigma(x, y));
                continue;
            }
            const Limit l = *q.limit(x);
            q.set_sigma(x, y, y >= l.point ? l.color : static_cast<Color>(bit(rng)));
        }
    }
    return q;
}

bool press_possible(const Condition& q, const ButtonTriple& t, Nat target) {
    if (t.b >= target || t.a >= t.b) return false;
    const Nat n0 = q.length();
    std::vector<Pair> free_pairs;
    for (Nat y = n0; y < target; ++y) {
        for (Nat x = 0; x < y; ++x) free_pairs.push_back(Pair{x, y});
    }
    // Candidate limits per new element: color and a point in [u+1, target].
    std::vector<std::vector<Limit>> options;
    for (Nat u = n0; u < target; ++u) {
        std::vector<Limit> o;
        for (Color c : {Color{0}, Color{1}}) {
            for (Nat z = u + 1; z <= target; ++z) o.push_back(Limit{c, z});
        }
        options.push_back(std::move(o));
    }
    Condition r(target);
    for (Nat y = 1; y < n0; ++y) {
        for (Nat x = 0; x < y; ++x) r.set_sigma(x, y, q.sigma(x, y));
    }
    for (Nat x = 0; x < n0; ++x) r.set_limit(x, *q.limit(x));
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < options.size(); ++i) r.set_limit(n0 + static_cast<Nat>(i), options[i][pick[i]]);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_pairs.size()); ++bits) {
            for (std::size_t i = 0; i < free_pairs.size(); ++i) {
                r.set_sigma(free_pairs[i].first, free_pairs[i].second, static_cast<Color>(bits >> i & 1u));
            }
            if (!valid(r)) continue;
            const Color s = r.sigma(t.a, t.b);
            const Color la = r.limit(t.a)->color;
            const Color lb = r.limit(t.b)->color;
            if (!(s == la && la == lb)) return true;
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return false;
}

}  // namespace oracle

namespace oracle {

TreeParams random_tree_params(std::mt19937_64& rng, Arity arity, ParityVariant variant, bool sentinel,
                              std::size_t max_reservoir, Nat depth_cap) {
    const std::size_t width = arity == Arity::kTwo ? 2 : 3;
    for (;;) {
        TreeParams p;
        p.arity = arity;
        p.variant = variant;
        p.depth_cap = depth_cap;
        p.k = static_cast<Nat>(rng() % 3);
        const Nat lo = 1 + static_cast<Nat>(rng() % 3);
        std::size_t size = 1 + rng() % max_reservoir;
        if (sentinel) size = std::min<std::size_t>(size, depth_cap);
        std::set<Nat> res;
        while (res.size() < size) res.insert(lo + static_cast<Nat>(rng() % 9));
        p.reservoir.assign(res.begin(), res.end());
        for (Nat x = 0; x < lo; ++x) {
            if (rng() % 4 == 0) p.h.insert(2 * x + rng() % 2);
        }
        std::vector<Nat> codes;
        for (Nat x : p.reservoir) {
            codes.push_back(2 * x);
            codes.push_back(2 * x + 1);
        }
        std::vector<Axiom> axioms;
        if (sentinel) {
            // Unconditional ones at k, k+1, ..; the last position waits for the largest element.
            const Nat m = p.reservoir.back();
            for (std::size_t i = 0; i + 1 < width; ++i) {
                axioms.push_back(Axiom{input_for(variant, i, p.k + static_cast<Nat>(i)), {}, {}, 1});
            }
            axioms.push_back(Axiom{input_for(variant, width - 1, p.k + static_cast<Nat>(width - 1)),
                                   {2 * m + rng() % 2}, {}, 1});
        }
        const std::size_t extra = rng() % (5 - axioms.size());
        for (std::size_t e = 0; e < extra; ++e) {
            Axiom a;
            const Nat v = p.k + static_cast<Nat>(rng() % 4);
            a.input = std::min<Nat>(11, input_for(variant, rng() % width, v));
            const std::size_t npos = rng() % 3;
            for (std::size_t t = 0; t < npos; ++t) a.positive.insert(codes[rng() % codes.size()]);
            if (rng() % 4 == 0) {
                const Nat c = codes[rng() % codes.size()];
                if (!a.positive.contains(c)) a.negative.insert(c);
            }
            a.output = rng() % 4 == 0 ? 0 : 1;
            axioms.push_back(a);
        }
        if (!check_consistency(axioms).empty()) continue;
        p.gamma = OracleFunctional(axioms);
        return p;
    }
}

}  // namespace oracle
