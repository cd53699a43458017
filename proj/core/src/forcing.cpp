// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/forcing.hpp"

#include <array>

namespace ramseylab {

Condition Condition::restrict(Nat m) const {
    if (m > length()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot restrict a condition of length " + std::to_string(length()) + " to " + std::to_string(m));
    }
    Condition out(m);
    for (Nat y = 1; y < m; ++y) {
        for (Nat x = 0; x < y; ++x) out.set_sigma(x, y, sigma(x, y));
    }
    for (Nat x = 0; x < m; ++x) {
        if (const auto& l = limit(x)) out.set_limit(x, *l);
    }
    return out;
}

ConditionReport validate_condition(const Condition& p, LimitMode mode) {
    ConditionReport report;
    const Nat n = p.length();
    for (Nat x = 0; x < n; ++x) {
        const auto& l = p.limit(x);
        if (!l) {
            if (mode == LimitMode::kTotal) report.missing_limits.push_back(x);
            continue;
        }
        for (Nat y = std::max(l->point, x + 1); y < n; ++y) {
            if (p.sigma(x, y) != l->color) report.violations.push_back(Pair{x, y});
        }
    }
    return report;
}

bool prolongs(const Condition& q, const Condition& p) {
    if (q.length() < p.length()) return false;
    for (Nat y = 1; y < p.length(); ++y) {
        for (Nat x = 0; x < y; ++x) {
            if (q.sigma(x, y) != p.sigma(x, y)) return false;
        }
    }
    for (Nat x = 0; x < p.length(); ++x) {
        if (q.limit(x) != p.limit(x)) return false;
    }
    return true;
}

namespace {

void require_valid(const Condition& p, LimitMode mode, const char* which) {
    const ConditionReport r = validate_condition(p, mode);
    if (r.ok()) return;
    std::string detail = r.violations.empty()
                             ? "no limit for element " + std::to_string(r.missing_limits.front())
                             : "pair {" + std::to_string(r.violations.front().first) + "," +
                                   std::to_string(r.violations.front().second) + "} breaks its limit promise";
    throw Error(ErrorCode::kInvalidCondition, std::string(which) + " condition is invalid: " + detail);
}

}  // namespace

bool extends(const Condition& q, const Condition& p, LimitMode mode) {
    require_valid(q, mode, "extending");
    require_valid(p, mode, "extended");
    return prolongs(q, p);
}

bool press_check(const Condition& q, const ButtonTriple& t) {
    if (t.a >= t.b || t.b >= q.length()) return false;
    const auto& la = q.limit(t.a);
    const auto& lb = q.limit(t.b);
    if (!la || !lb) return false;
    const Color s = q.sigma(t.a, t.b);
    return !(s == la->color && s == lb->color);
}

Nat least_consistent_point(const Condition& q, Nat x, Color c) {
    for (Nat y = q.length(); y > x + 1; --y) {
        if (q.sigma(x, y - 1) != c) return y;
    }
    return 0;
}

namespace {

// Tracks which values remain possible for the three press coordinates while
// the completion is fixed one coordinate at a time.
class PressCompletion {
public:
    PressCompletion(const Condition& q, const ButtonTriple& t, Nat target)
        : old_(q.length()), t_(t), r_(target), sigma_set_(pair_count(target), false), limit_set_(target, false) {
        for (Nat y = 1; y < old_; ++y) {
            for (Nat x = 0; x < y; ++x) {
                r_.set_sigma(x, y, q.sigma(x, y));
                sigma_set_[pair_index(x, y)] = true;
            }
        }
        for (Nat x = 0; x < old_; ++x) {
            r_.set_limit(x, *q.limit(x));
            limit_set_[x] = true;
        }
    }

    // Value of sigma on a new pair dictated by an old limit promise.
    std::optional<Color> forced_sigma(Nat x, Nat y) const {
        if (x < old_) {
            const Limit l = *r_.limit(x);
            if (y >= l.point) return l.color;
        }
        return std::nullopt;
    }

    bool feasible() const {
        std::array<unsigned, 3> masks{};
        if (sigma_set_[pair_index(t_.a, t_.b)]) {
            masks[0] = 1u << r_.sigma(t_.a, t_.b);
        } else if (const auto f = forced_sigma(t_.a, t_.b)) {
            masks[0] = 1u << *f;
        } else {
            masks[0] = 3;
        }
        masks[1] = limit_set_[t_.a] ? 1u << r_.limit(t_.a)->color : 3;
        masks[2] = limit_set_[t_.b] ? 1u << r_.limit(t_.b)->color : 3;
        const bool frozen_equal = masks[0] != 3 && masks[0] == masks[1] && masks[1] == masks[2];
        return !frozen_equal;
    }

    void complete_sigma() {
        for (std::size_t i = pair_count(old_); i < sigma_set_.size(); ++i) {
            const Pair p = pair_at(i);
            sigma_set_[i] = true;
            if (const auto f = forced_sigma(p.first, p.second)) {
                r_.set_sigma(p.first, p.second, *f);
                continue;
            }
            r_.set_sigma(p.first, p.second, 0);
            if (!feasible()) r_.set_sigma(p.first, p.second, 1);
        }
    }

    void complete_limits() {
        for (Nat x = old_; x < r_.length(); ++x) {
            limit_set_[x] = true;
            Color c = 0;
            r_.set_limit(x, Limit{0, 0});
            if (!feasible()) c = 1;
            r_.set_limit(x, Limit{c, least_consistent_point(r_, x, c)});
        }
    }

    Condition take() && { return std::move(r_); }

private:
    Nat old_;
    ButtonTriple t_;
    Condition r_;
    std::vector<bool> sigma_set_;
    std::vector<bool> limit_set_;
};

}  // namespace

Condition extend_pressing(const Condition& q, const ButtonTriple& t, Nat target_length) {
    require_valid(q, LimitMode::kTotal, "input");
    if (t.a >= t.b) {
        throw Error(ErrorCode::kInvalidArgument,
                    "button triple needs a < b, got a=" + std::to_string(t.a) + " b=" + std::to_string(t.b));
    }
    if (target_length <= t.b || target_length < q.length()) {
        throw Error(ErrorCode::kInvalidArgument, "target length " + std::to_string(target_length) +
                                                     " must exceed b=" + std::to_string(t.b) +
                                                     " and be at least |q|=" + std::to_string(q.length()));
    }
    PressCompletion completion(q, t, target_length);
    if (!completion.feasible()) {
        throw Error(ErrorCode::kPressBlocked, "the values at a=" + std::to_string(t.a) + ", b=" +
                                                  std::to_string(t.b) + " are already forced equal");
    }
    completion.complete_sigma();
    completion.complete_limits();
    return std::move(completion).take();
}

Coloring assemble_coloring(const std::vector<Condition>& chain) {
    if (chain.empty()) throw Error(ErrorCode::kInvalidArgument, "empty chain");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!prolongs(chain[i], chain[i - 1])) {
            throw Error(ErrorCode::kNotAChain,
                        "condition " + std::to_string(i) + " does not extend condition " + std::to_string(i - 1));
        }
    }
    Coloring f = chain.back().data();
    for (const Pair& bad : validate_condition(chain.back(), LimitMode::kPartial).violations) {
        f.clear_limit(bad.first);
    }
    return f;
}

}  // namespace ramseylab
