// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/search.hpp"

#include <algorithm>
#include <array>

namespace ramseylab {

std::optional<Color> determined_color(const Condition& q, Nat u, Nat v) {
    if (u > v) std::swap(u, v);
    if (u == v) return std::nullopt;
    if (v < q.length()) return q.sigma(u, v);
    if (u < q.length()) {
        const auto& l = q.limit(u);
        if (l && v >= l->point) return l->color;
    }
    return std::nullopt;
}

namespace {

bool axiom_forced(const Condition& q, const Axiom& a) {
    for (Nat code : a.positive) {
        const Pair p = pair_at(code);
        if (determined_color(q, p.first, p.second) != Color{1}) return false;
    }
    for (Nat code : a.negative) {
        const Pair p = pair_at(code);
        if (determined_color(q, p.first, p.second) != Color{0}) return false;
    }
    return true;
}

void require_phi(const ForcingContext& ctx) {
    if (!ctx.phi) throw Error(ErrorCode::kInvalidArgument, "forcing context has no transformer");
}

Nat window_start(const ForcingContext& ctx, Nat x) {
    const Nat from = ctx.horizon > ctx.tail ? ctx.horizon - ctx.tail : 0;
    return std::max(from, x + 1);
}

}  // namespace

std::optional<Color> forced_value(const Condition& q, const ForcingContext& ctx, Nat x, Nat y) {
    require_phi(ctx);
    if (x == y) return std::nullopt;
    const OracleFunctional& fn = ctx.phi->functional();
    for (std::size_t i : fn.axioms_for(static_cast<Nat>(pair_index(x, y)))) {
        if (axiom_forced(q, fn.axioms()[i])) return fn.axioms()[i].output;
    }
    return std::nullopt;
}

bool forces_limit(const Condition& q, const ForcingContext& ctx, Nat x, Color c) {
    const Nat from = window_start(ctx, x);
    if (from >= ctx.horizon) return false;
    for (Nat u = from; u < ctx.horizon; ++u) {
        if (forced_value(q, ctx, x, u) != c) return false;
    }
    return true;
}

std::optional<Nat> stabilization(const Condition& q, const ForcingContext& ctx, Nat x, Color c) {
    if (!forces_limit(q, ctx, x, c)) return std::nullopt;
    Nat m = window_start(ctx, x);
    while (m > x + 1 && forced_value(q, ctx, x, m - 1) == c) --m;
    return m;
}

namespace {

std::optional<Condition> build_at(const Condition& q, const Requirements& req, Nat length) {
    const Nat n0 = q.length();
    Condition r(length);
    for (Nat y = 1; y < n0; ++y) {
        for (Nat x = 0; x < y; ++x) r.set_sigma(x, y, q.sigma(x, y));
    }
    for (Nat x = 0; x < n0; ++x) {
        if (const auto& l = q.limit(x)) r.set_limit(x, *l);
    }
    std::vector<std::optional<Color>> color(length);
    for (const auto& [x, c] : req.limits) {
        if (x >= n0) color[x] = c;
    }
    for (const auto& [p, c] : req.pairs) {
        if (p.second < length || determined_color(q, p.first, p.second)) continue;
        // Past the new length only a fresh limit can carry the color.
        if (p.first < n0) return std::nullopt;
        if (color[p.first] && *color[p.first] != c) return std::nullopt;
        color[p.first] = c;
    }
    for (std::size_t i = pair_count(n0); i < pair_count(length); ++i) {
        const Pair p = pair_at(i);
        Color c = 0;
        if (const auto it = req.pairs.find(p); it != req.pairs.end()) {
            c = it->second;
        } else if (p.first < n0) {
            c = determined_color(q, p.first, p.second).value_or(0);
        } else {
            c = color[p.first].value_or(0);
        }
        r.set_sigma(p.first, p.second, c);
    }
    for (Nat x = n0; x < length; ++x) {
        const Color c = color[x].value_or(0);
        r.set_limit(x, Limit{c, least_consistent_point(r, x, c)});
    }
    return r;
}

}  // namespace

std::optional<Condition> realize(const Condition& q, const Requirements& req) {
    const Nat n0 = q.length();
    Nat lo = std::max(n0, req.min_length);
    Nat hi = lo;
    for (const auto& [x, c] : req.limits) {
        if (x < n0) {
            const auto& l = q.limit(x);
            if (!l || l->color != c) return std::nullopt;
        } else {
            lo = std::max(lo, x + 1);
        }
    }
    for (const auto& [p, c] : req.pairs) {
        const auto d = determined_color(q, p.first, p.second);
        if (d) {
            if (*d != c) return std::nullopt;
            continue;
        }
        lo = std::max(lo, p.first + 1);
        hi = std::max(hi, p.second + 1);
    }
    hi = std::max(hi, lo);
    for (Nat length = lo; length <= hi; ++length) {
        if (auto r = build_at(q, req, length)) return r;
    }
    return std::nullopt;
}

namespace {

struct BudgetExhausted {};

class ExtensionSearch {
public:
    ExtensionSearch(const Condition& q, const ForcingContext& ctx) : q_(q), ctx_(ctx) {}

    void add(const Fact& f) {
        if (f.kind != Fact::Kind::kLimit) {
            atoms_.push_back(f);
            return;
        }
        const Nat from = window_start(ctx_, f.x);
        if (from >= ctx_.horizon) impossible_ = true;
        for (Nat u = from; u < ctx_.horizon; ++u) atoms_.push_back(Fact::value(f.x, u, f.color));
    }

    SearchResult run() {
        SearchResult out;
        if (impossible_) return out;
        try {
            if (auto r = dfs(0)) {
                out.status = SearchStatus::kFound;
                out.condition = std::move(r);
            }
        } catch (const BudgetExhausted&) {
            out.status = SearchStatus::kBudgetExhausted;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    std::optional<Color> known(const Pair& p) const {
        if (const auto d = determined_color(q_, p.first, p.second)) return d;
        if (const auto it = req_.pairs.find(p); it != req_.pairs.end()) return it->second;
        return std::nullopt;
    }

    std::optional<Color> known_limit(Nat x) const {
        if (x < q_.length()) {
            const auto& l = q_.limit(x);
            return l ? std::optional<Color>(l->color) : std::nullopt;
        }
        if (const auto it = req_.limits.find(x); it != req_.limits.end()) return it->second;
        return std::nullopt;
    }

    // Adds the pair demands of an axiom; returns the pairs newly added, or
    // nullopt on a clash.
    std::optional<std::vector<Pair>> apply(const Axiom& a) {
        std::vector<Pair> added;
        const auto demand = [&](Nat code, Color c) {
            const Pair p = pair_at(code);
            const auto k = known(p);
            if (k) return *k == c;
            req_.pairs.emplace(p, c);
            added.push_back(p);
            return true;
        };
        bool ok = true;
        for (Nat code : a.positive) ok = ok && demand(code, 1);
        for (Nat code : a.negative) ok = ok && demand(code, 0);
        if (!ok) {
            undo(added);
            return std::nullopt;
        }
        return added;
    }

    void undo(const std::vector<Pair>& added) {
        for (const Pair& p : added) req_.pairs.erase(p);
    }

    std::optional<Condition> dfs(std::size_t i) {
        if (++nodes_ > ctx_.node_budget) throw BudgetExhausted{};
        if (i == atoms_.size()) return realize(q_, req_);
        const Fact& f = atoms_[i];
        if (f.kind == Fact::Kind::kValue) return value_atom(i, f);
        return not_all_equal_atom(i, f);
    }

    std::optional<Condition> value_atom(std::size_t i, const Fact& f) {
        if (f.x == f.y) return std::nullopt;
        const OracleFunctional& fn = ctx_.phi->functional();
        const auto& idx = fn.axioms_for(static_cast<Nat>(pair_index(f.x, f.y)));
        for (std::size_t k : idx) {
            const Axiom& a = fn.axioms()[k];
            if (a.output != f.color) continue;
            const auto added = apply(a);
            if (!added) continue;
            auto r = dfs(i + 1);
            undo(*added);
            if (r) return r;
            // An axiom already met by the current demands cannot be beaten
            // by a later alternative.
            if (added->empty()) return std::nullopt;
        }
        return std::nullopt;
    }

    std::optional<Condition> not_all_equal_atom(std::size_t i, const Fact& f) {
        const Pair ab = Pair::of(f.x, f.y);
        const auto sk = known(ab);
        const auto ak = known_limit(ab.first);
        const auto bk = known_limit(ab.second);
        for (unsigned bits = 0; bits < 8; ++bits) {
            const std::array<Color, 3> v = {static_cast<Color>(bits >> 2 & 1u), static_cast<Color>(bits >> 1 & 1u),
                                            static_cast<Color>(bits & 1u)};
            if (v[0] == v[1] && v[1] == v[2]) continue;
            if ((sk && *sk != v[0]) || (ak && *ak != v[1]) || (bk && *bk != v[2])) continue;
            const Requirements saved = req_;
            req_.pairs.emplace(ab, v[0]);
            req_.limits.emplace(ab.first, v[1]);
            req_.limits.emplace(ab.second, v[2]);
            req_.min_length = std::max(req_.min_length, ab.second + 1);
            auto r = dfs(i + 1);
            req_ = saved;
            if (r) return r;
        }
        return std::nullopt;
    }

    const Condition& q_;
    const ForcingContext& ctx_;
    std::vector<Fact> atoms_;
    Requirements req_;
    std::size_t nodes_{0};
    bool impossible_{false};
};

}  // namespace

SearchResult force_extension(const Condition& q, const ForcingContext& ctx, const std::vector<Fact>& facts) {
    ExtensionSearch search(q, ctx);
    for (const Fact& f : facts) {
        if (f.kind != Fact::Kind::kNotAllEqual) require_phi(ctx);
        search.add(f);
    }
    return search.run();
}

Condition canonical_completion(const Condition& q, Nat length) {
    if (length <= q.length()) return q;
    return *build_at(q, Requirements{}, length);
}

}  // namespace ramseylab
