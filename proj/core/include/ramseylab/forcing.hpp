// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/types.hpp"

namespace ramseylab {

/// A forcing condition: a coloring sigma of the pairs below n together with
/// limit promises l(x) = (i, z) for x < n. Stored as a Coloring whose limit
/// annotations are the promises.
class Condition {
public:
    Condition() = default;
    /// Length n, sigma all 0, l undefined everywhere.
    explicit Condition(Nat n) : data_(n) {}
    explicit Condition(Coloring data) : data_(std::move(data)) {}

    Nat length() const noexcept { return data_.horizon(); }
    Color sigma(Nat x, Nat y) const { return data_.at(x, y); }
    void set_sigma(Nat x, Nat y, Color c) { data_.set(x, y, c); }
    const std::optional<Limit>& limit(Nat x) const { return data_.limit(x); }
    void set_limit(Nat x, Limit l) { data_.set_limit(x, l); }
    void clear_limit(Nat x) { data_.clear_limit(x); }

    /// sigma and l as a coloring with annotations.
    const Coloring& data() const noexcept { return data_; }

    /// First m elements of the condition.
    Condition restrict(Nat m) const;

    friend bool operator==(const Condition&, const Condition&) = default;

private:
    Coloring data_;
};

enum class LimitMode { kTotal, kPartial };

struct ConditionReport {
    std::vector<Pair> violations;   // pairs (x,y) with y >= z_x and sigma(x,y) != i_x
    std::vector<Nat> missing_limits;  // only in total mode
    bool ok() const noexcept { return violations.empty() && missing_limits.empty(); }
};

ConditionReport validate_condition(const Condition& p, LimitMode mode = LimitMode::kTotal);

/// q <= p: q prolongs p, keeping every sigma value and every limit promise.
/// Throws kInvalidCondition if either condition fails validation.
bool extends(const Condition& q, const Condition& p, LimitMode mode = LimitMode::kTotal);

/// The data comparison behind extends, without validation.
bool prolongs(const Condition& q, const Condition& p);

struct ButtonTriple {
    Nat x{0};
    Nat a{0};
    Nat b{0};
    friend bool operator==(const ButtonTriple&, const ButtonTriple&) = default;
};

/// Whether sigma(a,b), the limit color of a and the limit color of b are all
/// defined in q and not all equal.
bool press_check(const Condition& q, const ButtonTriple& t);

/// Lexicographically least valid extension of q to `target_length` that
/// presses t. New sigma pairs are fixed first in pair-index order (0 before
/// 1), then new limits in increasing x, each as (0, least z) before
/// (1, least z). Throws kPressBlocked if every extension leaves the three
/// values equal, kInvalidArgument if target_length <= t.b or < |q|.
Condition extend_pressing(const Condition& q, const ButtonTriple& t, Nat target_length);

/// The coloring given by the union of a chain of conditions, each extending
/// the previous one. Throws kNotAChain or kInvalidArgument (empty chain).
Coloring assemble_coloring(const std::vector<Condition>& chain);

/// Least z such that sigma(x,y) = c for every y with max(z, x+1) <= y < |q|.
Nat least_consistent_point(const Condition& q, Nat x, Color c);

}  // namespace ramseylab
