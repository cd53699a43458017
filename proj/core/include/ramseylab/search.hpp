// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramseylab/forcing.hpp"
#include "ramseylab/functional.hpp"

namespace ramseylab {

/// Finite forcing semantics for a transformer Φ read against conditions.
///
/// A base pair {u<v} is determined by q when v < |q| (its sigma value) or
/// when u < |q| and v is at or past the limit point of u (the limit color).
/// q forces Φ^f(x,y) = c when some axiom for {x,y} with output c reads only
/// determined pairs with matching colors. q forces lim Φ^f(x,·) = c when it
/// forces Φ^f(x,u) = c for every u > x in the last `tail` values below the
/// horizon.
struct ForcingContext {
    const ColoringTransformer* phi{nullptr};
    Nat horizon{0};
    Nat tail{3};
    std::size_t node_budget{200000};
};

std::optional<Color> determined_color(const Condition& q, Nat u, Nat v);
std::optional<Color> forced_value(const Condition& q, const ForcingContext& ctx, Nat x, Nat y);
bool forces_limit(const Condition& q, const ForcingContext& ctx, Nat x, Color c);
/// Least m such that Φ^f(x,u) = c is forced for every u with max(m, x+1) <= u < horizon,
/// or nullopt when the limit is not forced.
std::optional<Nat> stabilization(const Condition& q, const ForcingContext& ctx, Nat x, Color c);

struct Fact {
    enum class Kind { kValue, kLimit, kNotAllEqual };
    Kind kind{Kind::kValue};
    Nat x{0};
    Nat y{0};
    Color color{0};

    static Fact value(Nat x, Nat y, Color c) { return {Kind::kValue, x, y, c}; }
    static Fact limit(Nat x, Color c) { return {Kind::kLimit, x, 0, c}; }
    /// sigma(a,b), the limit color of a and that of b are not all equal.
    static Fact not_all_equal(Nat a, Nat b) { return {Kind::kNotAllEqual, a, b, 0}; }
};

/// Base-level demands an extension has to meet.
struct Requirements {
    std::map<Pair, Color> pairs;
    std::map<Nat, Color> limits;
    Nat min_length{0};
};

/// Shortest extension of q meeting the requirements. New limit colors come
/// from the requirements (else 0) with the least consistent point; new sigma
/// values are required, dictated by a limit, or 0.
std::optional<Condition> realize(const Condition& q, const Requirements& req);

enum class SearchStatus { kFound, kImpossible, kBudgetExhausted };

struct SearchResult {
    SearchStatus status{SearchStatus::kImpossible};
    std::optional<Condition> condition;
    std::size_t nodes{0};
};

/// Depth-first search over axiom choices (list order) and not-all-equal
/// patterns (lexicographic) for an extension of q forcing every fact.
SearchResult force_extension(const Condition& q, const ForcingContext& ctx, const std::vector<Fact>& facts);

/// Extension of q to `length`: sigma dictated by a limit or 0, new limits
/// (0, least consistent point).
Condition canonical_completion(const Condition& q, Nat length);

}  // namespace ramseylab
