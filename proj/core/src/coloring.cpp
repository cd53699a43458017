// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/coloring.hpp"

#include <cmath>
#include <random>

namespace ramseylab {

Pair pair_at(std::size_t index) {
    // Largest y with y(y-1)/2 <= index.
    auto y = static_cast<Nat>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (pair_count(y) > index) --y;
    while (pair_count(y + 1) <= index) ++y;
    return Pair{static_cast<Nat>(index - pair_count(y)), y};
}

Coloring::Coloring(Nat horizon)
    : horizon_(horizon), table_(pair_count(horizon), 0), limits_(horizon) {}

Coloring Coloring::from_function(Nat horizon, const std::function<Color(Nat, Nat)>& fn) {
    Coloring f(horizon);
    for (Nat y = 1; y < horizon; ++y) {
        for (Nat x = 0; x < y; ++x) f.set(x, y, fn(x, y));
    }
    return f;
}

void Coloring::check_pair(Nat x, Nat y) const {
    if (x == y) {
        throw Error(ErrorCode::kInvalidArgument,
                    "pair {" + std::to_string(x) + "," + std::to_string(y) + "} is not a 2-element set");
    }
    if (x >= horizon_ || y >= horizon_) {
        throw Error(ErrorCode::kOutOfHorizon, "pair {" + std::to_string(x) + "," + std::to_string(y) +
                                                  "} is outside horizon " + std::to_string(horizon_));
    }
}

Color Coloring::at(Nat x, Nat y) const {
    check_pair(x, y);
    return table_[pair_index(x, y)];
}

void Coloring::set(Nat x, Nat y, Color c) {
    check_pair(x, y);
    if (c > 1) throw Error(ErrorCode::kInvalidArgument, "color must be 0 or 1");
    table_[pair_index(x, y)] = c;
}

const std::optional<Limit>& Coloring::limit(Nat x) const {
    if (x >= horizon_) {
        throw Error(ErrorCode::kOutOfHorizon, "element " + std::to_string(x) + " is outside horizon " +
                                                  std::to_string(horizon_));
    }
    return limits_[x];
}

void Coloring::set_limit(Nat x, Limit limit) {
    if (x >= horizon_) {
        throw Error(ErrorCode::kOutOfHorizon, "element " + std::to_string(x) + " is outside horizon " +
                                                  std::to_string(horizon_));
    }
    if (limit.color > 1) throw Error(ErrorCode::kInvalidArgument, "limit color must be 0 or 1");
    limits_[x] = limit;
}

void Coloring::clear_limit(Nat x) {
    if (x < horizon_) limits_[x].reset();
}

bool Coloring::has_total_limits() const {
    for (const auto& l : limits_) {
        if (!l) return false;
    }
    return true;
}

std::vector<std::string> Coloring::violations() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] > 1) {
            const Pair p = pair_at(i);
            out.push_back("color of {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                          "} is not in {0,1}");
        }
    }
    for (Nat x = 0; x < horizon_; ++x) {
        if (!limits_[x]) continue;
        const Limit l = *limits_[x];
        for (Nat u = std::max(l.point, x + 1); u < horizon_; ++u) {
            if (at(x, u) != l.color) {
                out.push_back("row " + std::to_string(x) + " has limit " + std::to_string(l.color) +
                              " from " + std::to_string(l.point) + " but f(" + std::to_string(x) + "," +
                              std::to_string(u) + ")=" + std::to_string(at(x, u)));
                break;
            }
        }
    }
    return out;
}

JoinedSet JoinedSet::encode(const NatSet& left, const NatSet& right) {
    NatSet codes;
    for (Nat x : left) codes.insert(2 * x);
    for (Nat y : right) codes.insert(2 * y + 1);
    return JoinedSet(std::move(codes));
}

NatSet JoinedSet::left() const {
    NatSet out;
    for (Nat c : codes_) {
        if (c % 2 == 0) out.insert(c / 2);
    }
    return out;
}

NatSet JoinedSet::right() const {
    NatSet out;
    for (Nat c : codes_) {
        if (c % 2 == 1) out.insert(c / 2);
    }
    return out;
}

std::pair<NatSet, NatSet> decode_join(const JoinedSet& z) { return {z.left(), z.right()}; }

std::string_view to_string(HomogeneityKind kind) {
    switch (kind) {
        case HomogeneityKind::kHomogeneous: return "homog";
        case HomogeneityKind::kPHomogeneous: return "p-homog";
        case HomogeneityKind::kIncreasingPHomogeneous: return "incr-p-homog";
        case HomogeneityKind::kLimitHomogeneous: return "limit-homog";
    }
    return "?";
}

std::optional<HomogeneityKind> parse_homogeneity_kind(std::string_view name) {
    for (auto k : {HomogeneityKind::kHomogeneous, HomogeneityKind::kPHomogeneous,
                   HomogeneityKind::kIncreasingPHomogeneous, HomogeneityKind::kLimitHomogeneous}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

namespace {

void require_in_horizon(const Coloring& f, const NatSet& s) {
    if (!s.empty() && *s.rbegin() >= f.horizon()) {
        throw Error(ErrorCode::kOutOfHorizon, "element " + std::to_string(*s.rbegin()) +
                                                  " is outside horizon " + std::to_string(f.horizon()));
    }
}

// Accumulates pair colors and records the first disagreement.
class ConstancyScan {
public:
    bool feed(Nat x, Nat y, Color c) {
        if (!color_) {
            color_ = c;
            return true;
        }
        if (*color_ != c) {
            counterexample_ = Pair::of(x, y);
            return false;
        }
        return true;
    }

    HomogeneityResult result() const {
        HomogeneityResult r;
        if (counterexample_) {
            r.verdict = Verdict::kFails;
            r.counterexample = counterexample_;
        } else if (color_) {
            r.verdict = Verdict::kHolds;
            r.color = color_;
        }
        return r;
    }

private:
    std::optional<Color> color_;
    std::optional<Pair> counterexample_;
};

}  // namespace

HomogeneityResult check_homogeneity(const Coloring& f, const NatSet& h, HomogeneityKind kind) {
    require_in_horizon(f, h);
    ConstancyScan scan;
    switch (kind) {
        case HomogeneityKind::kHomogeneous:
            for (auto i = h.begin(); i != h.end(); ++i) {
                for (auto j = std::next(i); j != h.end(); ++j) {
                    if (!scan.feed(*i, *j, f.at(*i, *j))) return scan.result();
                }
            }
            return scan.result();
        case HomogeneityKind::kLimitHomogeneous: {
            std::optional<Nat> first;
            for (Nat x : h) {
                const auto& l = f.limit(x);
                if (!l) {
                    throw Error(ErrorCode::kMissingLimit, "no limit annotation for element " + std::to_string(x));
                }
                if (!first) first = x;
                if (!scan.feed(*first, x, l->color)) return scan.result();
            }
            return scan.result();
        }
        case HomogeneityKind::kPHomogeneous:
        case HomogeneityKind::kIncreasingPHomogeneous:
            throw Error(ErrorCode::kInvalidArgument,
                        std::string(to_string(kind)) + " applies to joined sets, not plain sets");
    }
    return scan.result();
}

HomogeneityResult check_homogeneity(const Coloring& f, const JoinedSet& z, HomogeneityKind kind) {
    if (kind != HomogeneityKind::kPHomogeneous && kind != HomogeneityKind::kIncreasingPHomogeneous) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(to_string(kind)) + " applies to plain sets, not joined sets");
    }
    const auto [left, right] = decode_join(z);
    require_in_horizon(f, left);
    require_in_horizon(f, right);
    const bool increasing = kind == HomogeneityKind::kIncreasingPHomogeneous;
    ConstancyScan scan;
    for (Nat x : left) {
        for (Nat y : right) {
            if (x == y || (increasing && y < x)) continue;
            if (!scan.feed(x, y, f.at(x, y))) return scan.result();
        }
    }
    return scan.result();
}

std::optional<Limit> limit_color(const Coloring& f, Nat x, LimitOptions options) {
    if (const auto& annotated = f.limit(x)) return annotated;
    const Nat n = f.horizon();
    if (x + 1 >= n) return std::nullopt;
    const Color tail = f.at(x, n - 1);
    Nat start = n - 1;
    while (start > x + 1 && f.at(x, start - 1) == tail) --start;
    if (n - start < options.min_tail) return std::nullopt;
    // A row constant on every u > x stabilizes from 0.
    return Limit{tail, start == x + 1 ? 0 : start};
}

Coloring random_stable_coloring(std::uint64_t seed, Nat horizon, Nat stab_bound) {
    if (stab_bound >= horizon) {
        throw Error(ErrorCode::kInvalidArgument, "stab_bound " + std::to_string(stab_bound) +
                                                     " must be below horizon " + std::to_string(horizon));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<Nat> point(0, stab_bound);
    Coloring f(horizon);
    for (Nat x = 0; x < horizon; ++x) {
        f.set_limit(x, Limit{static_cast<Color>(bit(rng)), point(rng)});
    }
    for (Nat y = 1; y < horizon; ++y) {
        for (Nat x = 0; x < y; ++x) {
            const Limit l = *f.limit(x);
            f.set(x, y, y >= l.point ? l.color : static_cast<Color>(bit(rng)));
        }
    }
    return f;
}

}  // namespace ramseylab
