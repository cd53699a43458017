// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramseylab/types.hpp"

namespace ramseylab {

/// Limit annotation for a row: f(x, u) = color for every u > x with
/// point <= u < horizon.
struct Limit {
    Color color{0};
    Nat point{0};
    friend bool operator==(const Limit&, const Limit&) = default;
};

/// Index of the pair {x, y} (x < y) in the enumeration ordered by the larger
/// element: {0,1}, {0,2}, {1,2}, {0,3}, ...  All pairs below n occupy the
/// indices [0, n(n-1)/2).
inline std::size_t pair_index(Nat x, Nat y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
}

inline std::size_t pair_count(Nat n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Inverse of pair_index.
Pair pair_at(std::size_t index);

/// A 2-coloring of pairs over {0, ..., horizon-1}, optionally carrying limit
/// annotations. The table is always total; a freshly constructed coloring is
/// constant 0.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(Nat horizon);

    static Coloring from_function(Nat horizon,
                                  const std::function<Color(Nat, Nat)>& fn);

    Nat horizon() const noexcept { return horizon_; }

    Color at(Nat x, Nat y) const;
    void set(Nat x, Nat y, Color c);

    const std::optional<Limit>& limit(Nat x) const;
    void set_limit(Nat x, Limit limit);
    void clear_limit(Nat x);
    bool has_total_limits() const;

    /// Human-readable descriptions of every invariant violation; empty when
    /// the coloring is well formed.
    std::vector<std::string> violations() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    void check_pair(Nat x, Nat y) const;

    Nat horizon_{0};
    std::vector<Color> table_;
    std::vector<std::optional<Limit>> limits_;
};

/// A finite set read as the join H_L (+) H_R: 2x codes x in the left column,
/// 2y+1 codes y in the right column.
class JoinedSet {
public:
    JoinedSet() = default;
    explicit JoinedSet(NatSet codes) : codes_(std::move(codes)) {}

    static JoinedSet encode(const NatSet& left, const NatSet& right);

    const NatSet& codes() const noexcept { return codes_; }
    NatSet left() const;
    NatSet right() const;
    bool empty() const noexcept { return codes_.empty(); }

    friend bool operator==(const JoinedSet&, const JoinedSet&) = default;

private:
    NatSet codes_;
};

std::pair<NatSet, NatSet> decode_join(const JoinedSet& z);

enum class HomogeneityKind { kHomogeneous, kPHomogeneous, kIncreasingPHomogeneous, kLimitHomogeneous };

std::string_view to_string(HomogeneityKind kind);
std::optional<HomogeneityKind> parse_homogeneity_kind(std::string_view name);

enum class Verdict { kHolds, kFails, kVacuous };

struct HomogeneityResult {
    Verdict verdict{Verdict::kVacuous};
    std::optional<Color> color;
    /// First pair (in scan order) whose color disagrees with the first pair
    /// seen; for limit homogeneity, the two elements with differing limits.
    std::optional<Pair> counterexample;

    bool holds() const noexcept { return verdict == Verdict::kHolds; }
};

/// Decides homogeneity or limit homogeneity of a plain set. Sets with fewer
/// than two elements are vacuous for kHomogeneous; for kLimitHomogeneous only
/// the empty set is vacuous.
HomogeneityResult check_homogeneity(const Coloring& f, const NatSet& h, HomogeneityKind kind);

/// Decides p-homogeneity or increasing p-homogeneity of a joined set.
HomogeneityResult check_homogeneity(const Coloring& f, const JoinedSet& z, HomogeneityKind kind);

struct LimitOptions {
    /// Minimum number of tail columns that must agree before an empirical
    /// limit is reported.
    Nat min_tail{3};
};

/// Limit color of row x and its least stabilization point: the stored
/// annotation when present, otherwise the empirical tail of the row.
std::optional<Limit> limit_color(const Coloring& f, Nat x, LimitOptions options = {});

/// Deterministic random stable coloring whose every row stabilizes at or
/// before stab_bound.
Coloring random_stable_coloring(std::uint64_t seed, Nat horizon, Nat stab_bound);

}  // namespace ramseylab
