// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ramseylab/coloring.hpp"
#include "ramseylab/types.hpp"

namespace ramseylab {

/// A finite staged enumeration X_0 ⊆ X_1 ⊆ ... ⊆ X_S of subsets of
/// {0,...,D-1}. The last stage is taken as the settled set.
class CEApproximation {
public:
    /// Throws kInvalidArgument if there are no stages, an element is >= D,
    /// or some stage is not contained in its successor.
    CEApproximation(Nat domain, std::vector<NatSet> stages);

    Nat domain() const noexcept { return domain_; }
    const std::vector<NatSet>& stages() const noexcept { return stages_; }
    const NatSet& final_set() const noexcept { return stages_.back(); }
    /// X_s, with s clamped to the last stage.
    const NatSet& stage(std::size_t s) const;

    /// Least s with X_t ∩ [0,z] = X_s ∩ [0,z] for every later t.
    Nat least_modulus(Nat z) const;

    /// max{ μ(z) : z <= min(x, D-1) }, or 0 when D = 0.
    Nat modulus_envelope(Nat x) const;

private:
    Nat domain_;
    std::vector<NatSet> stages_;
    std::vector<Nat> modulus_;
};

/// f(x,y) = 0 iff y - x <= max{ μ(z) : z <= x }, with every row annotated by
/// limit (1, x + envelope + 1). Throws kInvalidArgument when horizon < 2.
Coloring build_coding_coloring(const CEApproximation& a, Nat horizon);

/// Recovers whether z is in the settled set from a solution Z that is
/// increasing p-homogeneous with color 1 for the coding coloring. Throws
/// kInsufficientSolution if Z lacks the needed x or y, kInvalidArgument if z
/// is outside the domain.
bool decode_membership(const CEApproximation& a, const JoinedSet& z_set, Nat z);

}  // namespace ramseylab
