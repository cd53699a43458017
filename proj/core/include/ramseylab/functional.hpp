// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/types.hpp"

namespace ramseylab {

/// One axiom of a finite-use functional: on input `input`, output `output`
/// whenever `positive` is contained in the oracle and `negative` is disjoint
/// from it.
struct Axiom {
    Nat input{0};
    NatSet positive;
    NatSet negative;
    Color output{0};

    bool fires_on(const NatSet& oracle) const;
    /// Largest number queried by the axiom, or nullopt for an unconditional one.
    std::optional<Nat> use() const;

    friend bool operator==(const Axiom&, const Axiom&) = default;
};

/// Two axioms are compatible when some oracle can fire both.
bool compatible(const Axiom& a, const Axiom& b);

struct Evaluation {
    std::optional<Color> value;  // nullopt: divergent
    std::optional<std::size_t> axiom;
    bool converges() const noexcept { return value.has_value(); }
};

/// A use-bounded oracle functional presented as a finite axiom list.
class OracleFunctional {
public:
    OracleFunctional() = default;

    /// Validates consistency (and, in monotone mode, absence of negative
    /// conditions). Throws kInconsistentFunctional / kInvalidArgument.
    explicit OracleFunctional(std::vector<Axiom> axioms, bool monotone = false);

    const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
    bool monotone() const noexcept { return monotone_; }

    /// Output of the firing axiom for n, or divergent. Re-checks that all
    /// firing axioms agree.
    Evaluation evaluate(const NatSet& oracle, Nat n) const;

    /// Axioms whose input is n, in list order.
    const std::vector<std::size_t>& axioms_for(Nat n) const;

    /// Inputs that some axiom maps to `output`.
    NatSet inputs_with_output(Color output) const;

    friend bool operator==(const OracleFunctional& a, const OracleFunctional& b) {
        return a.axioms_ == b.axioms_ && a.monotone_ == b.monotone_;
    }

private:
    void index();

    std::vector<Axiom> axioms_;
    bool monotone_{false};
    std::vector<std::pair<Nat, std::vector<std::size_t>>> by_input_;
};

/// Every pair of axiom indices (i < j) violating consistency.
std::vector<std::pair<std::size_t, std::size_t>> check_consistency(const std::vector<Axiom>& axioms);

/// Oracle set presentation of a coloring: {pair_index(x,y) : f(x,y) = 1}.
NatSet coloring_oracle(const Coloring& f);

/// A functional read as a map from colorings to colorings. The value at pair
/// {x,y} is the functional's output on input pair_index(x,y); it may query
/// only pairs whose larger element is below max(x,y)*use_bound + use_bound.
class ColoringTransformer {
public:
    ColoringTransformer() = default;
    /// Throws kUseBoundViolation if an axiom queries beyond the bound.
    ColoringTransformer(OracleFunctional functional, Nat use_bound);

    const OracleFunctional& functional() const noexcept { return functional_; }
    Nat use_bound() const noexcept { return use_bound_; }

    /// Exclusive bound on the larger element of pairs the value at {x,y} may read.
    Nat query_bound(Nat x, Nat y) const { return (std::max(x, y) + 1) * use_bound_; }

    friend bool operator==(const ColoringTransformer&, const ColoringTransformer&) = default;

private:
    OracleFunctional functional_;
    Nat use_bound_{1};
};

struct TransformResult {
    Coloring coloring;                   // decided prefix of the image
    std::optional<Pair> first_undecided; // set when the image stops short
};

/// Image of f under the transformer on the largest horizon every pair of
/// which is decided within the use bound.
TransformResult apply_transformer(const ColoringTransformer& phi, const Coloring& f);

namespace transformers {

/// Copies the color of each pair, for pairs below `horizon`.
ColoringTransformer identity(Nat horizon);
/// Outputs `color` on every pair below `horizon` without querying.
ColoringTransformer constant(Nat horizon, Color color);
/// Outputs the complement of each pair's color.
ColoringTransformer flip(Nat horizon);

}  // namespace transformers

}  // namespace ramseylab
