// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/halting.hpp"

#include <algorithm>
#include <iterator>

namespace ramseylab {

namespace {

bool same_below(const NatSet& a, const NatSet& b, Nat z) {
    return std::equal(a.begin(), a.upper_bound(z), b.begin(), b.upper_bound(z));
}

}  // namespace

CEApproximation::CEApproximation(Nat domain, std::vector<NatSet> stages)
    : domain_(domain), stages_(std::move(stages)) {
    if (stages_.empty()) throw Error(ErrorCode::kInvalidArgument, "approximation has no stages");
    for (std::size_t s = 0; s < stages_.size(); ++s) {
        if (!stages_[s].empty() && *stages_[s].rbegin() >= domain_) {
            throw Error(ErrorCode::kInvalidArgument, "stage " + std::to_string(s) + " contains " +
                                                         std::to_string(*stages_[s].rbegin()) +
                                                         ", outside domain " + std::to_string(domain_));
        }
        if (s > 0 && !std::includes(stages_[s].begin(), stages_[s].end(), stages_[s - 1].begin(),
                                    stages_[s - 1].end())) {
            throw Error(ErrorCode::kInvalidArgument,
                        "stage " + std::to_string(s) + " drops an element of stage " + std::to_string(s - 1));
        }
    }
    modulus_.resize(domain_);
    for (Nat z = 0; z < domain_; ++z) {
        Nat s = static_cast<Nat>(stages_.size() - 1);
        while (s > 0 && same_below(stages_[s - 1], stages_.back(), z)) --s;
        modulus_[z] = s;
    }
}

const NatSet& CEApproximation::stage(std::size_t s) const { return stages_[std::min(s, stages_.size() - 1)]; }

Nat CEApproximation::least_modulus(Nat z) const {
    if (z >= domain_) {
        throw Error(ErrorCode::kInvalidArgument,
                    "z=" + std::to_string(z) + " is outside domain " + std::to_string(domain_));
    }
    return modulus_[z];
}

Nat CEApproximation::modulus_envelope(Nat x) const {
    if (domain_ == 0) return 0;
    const Nat top = std::min(x, domain_ - 1);
    return *std::max_element(modulus_.begin(), modulus_.begin() + top + 1);
}

Coloring build_coding_coloring(const CEApproximation& a, Nat horizon) {
    if (horizon < 2) {
        throw Error(ErrorCode::kInvalidArgument, "coding coloring needs horizon >= 2, got " + std::to_string(horizon));
    }
    Coloring f(horizon);
    for (Nat x = 0; x < horizon; ++x) {
        const Nat m = a.modulus_envelope(x);
        for (Nat y = x + 1; y < horizon; ++y) f.set(x, y, y - x <= m ? 0 : 1);
        f.set_limit(x, Limit{1, x + m + 1});
    }
    return f;
}

bool decode_membership(const CEApproximation& a, const JoinedSet& z_set, Nat z) {
    if (z >= a.domain()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "z=" + std::to_string(z) + " is outside domain " + std::to_string(a.domain()));
    }
    const auto [left, right] = decode_join(z_set);
    const auto x = left.lower_bound(z);
    if (x == left.end()) {
        throw Error(ErrorCode::kInsufficientSolution, "no left-column element >= " + std::to_string(z));
    }
    const auto y = right.upper_bound(*x);
    if (y == right.end()) {
        throw Error(ErrorCode::kInsufficientSolution, "no right-column element above " + std::to_string(*x));
    }
    return a.stage(*y - *x).contains(z);
}

}  // namespace ramseylab
