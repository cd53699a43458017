// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseylab/coloring.hpp"

namespace ramseylab {

/// The four stable Ramsey-type problems, ordered weakest first.
enum class Principle { kD, kSIPT, kSPT, kSRT };
inline constexpr std::array<Principle, 4> kAllPrinciples = {Principle::kD, Principle::kSIPT, Principle::kSPT,
                                                            Principle::kSRT};

enum class Reducibility { kComputable, kWeihrauch, kStrongComputable, kStrongWeihrauch };
inline constexpr std::array<Reducibility, 4> kAllReducibilities = {
    Reducibility::kComputable, Reducibility::kWeihrauch, Reducibility::kStrongComputable,
    Reducibility::kStrongWeihrauch};

std::string_view to_string(Principle p);
std::string_view to_string(Reducibility r);
std::optional<Principle> parse_principle(std::string_view name);
std::optional<Reducibility> parse_reducibility(std::string_view name);

/// Homogeneity notion a solution of the principle must satisfy.
HomogeneityKind solution_kind(Principle p);

/// Whether `solution` (a plain set for SRT and D, a joined set for SPT and
/// SIPT) is a non-vacuous solution of f.
bool is_solution(const Coloring& f, Principle p, const NatSet& solution);

struct GreedyHomogeneous {
    std::vector<Nat> elements;
    /// Elements of the source set that were scanned and rejected. A non-empty
    /// list means the enumeration was cut off by the horizon, not that it failed.
    std::vector<Nat> rejected;
};

/// Greedy thinning of a set limit homogeneous with color i to a set
/// homogeneous with color i: take the least element, then repeatedly the
/// least later element whose pairs with every earlier pick have color i.
/// Throws kMissingLimit if an element lacks an annotation and
/// kPreconditionViolated if some element's limit color differs from i.
GreedyHomogeneous limit_to_homogeneous(const Coloring& f, const NatSet& l, Color i);

struct IptReduction {
    Nat left_min{0};
    Nat right_witness{0};
    Color color{0};
    GreedyHomogeneous homogeneous;
};

/// Homogeneous set from an increasing p-homogeneous one.
IptReduction ipt_to_homogeneous(const Coloring& f, const JoinedSet& z);

/// H (+) H.
JoinedSet homogeneous_to_p(const NatSet& h);

/// Maps a solution of `from` to a solution of `to` along the chain
/// SRT -> SPT -> SIPT -> D (compositions allowed). Throws kUnknownKind
/// for any other direction.
NatSet forward_chain(Principle from, Principle to, const NatSet& solution);

enum class RelationStatus { kHolds, kFails };

enum class RelationBasis {
    kReflexive,
    kCited,        // stated result
    kImplication,  // follows from a stronger/weaker notion of reduction
    kComposition,  // follows by transitivity through a third principle
};

struct RelationEntry {
    RelationStatus status{RelationStatus::kHolds};
    RelationBasis basis{RelationBasis::kCited};
    std::string citation;
};

/// For each ordered pair (P, Q) and notion r: whether P <=_r Q.
class RelationMatrix {
public:
    const RelationEntry& at(Principle reduced, Principle target, Reducibility r) const;
    RelationEntry& at(Principle reduced, Principle target, Reducibility r);

    /// Entries violating the implication diagram sW => sc, sW => W, sc => c, W => c.
    std::vector<std::string> closure_violations() const;

private:
    std::array<std::array<std::array<std::optional<RelationEntry>, 4>, 4>, 4> entries_{};
    friend RelationMatrix relation_matrix();
};

RelationMatrix relation_matrix();

std::string_view to_string(RelationStatus s);
std::string_view to_string(RelationBasis b);

}  // namespace ramseylab
