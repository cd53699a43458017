// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/functional.hpp"

#include <algorithm>

namespace ramseylab {

namespace {

bool disjoint(const NatSet& a, const NatSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

}  // namespace

bool Axiom::fires_on(const NatSet& oracle) const {
    for (Nat p : positive) {
        if (!oracle.contains(p)) return false;
    }
    for (Nat q : negative) {
        if (oracle.contains(q)) return false;
    }
    return true;
}

std::optional<Nat> Axiom::use() const {
    std::optional<Nat> u;
    if (!positive.empty()) u = *positive.rbegin();
    if (!negative.empty()) u = std::max(u.value_or(0), *negative.rbegin());
    return u;
}

bool compatible(const Axiom& a, const Axiom& b) {
    return disjoint(a.positive, b.negative) && disjoint(b.positive, a.negative) &&
           disjoint(a.positive, a.negative) && disjoint(b.positive, b.negative);
}

std::vector<std::pair<std::size_t, std::size_t>> check_consistency(const std::vector<Axiom>& axioms) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        for (std::size_t j = i + 1; j < axioms.size(); ++j) {
            const Axiom& a = axioms[i];
            const Axiom& b = axioms[j];
            if (a.input == b.input && a.output != b.output && compatible(a, b)) out.emplace_back(i, j);
        }
    }
    return out;
}

OracleFunctional::OracleFunctional(std::vector<Axiom> axioms, bool monotone)
    : axioms_(std::move(axioms)), monotone_(monotone) {
    for (const Axiom& a : axioms_) {
        if (a.output > 1) throw Error(ErrorCode::kInvalidArgument, "axiom output must be 0 or 1");
        if (monotone_ && !a.negative.empty()) {
            throw Error(ErrorCode::kInvalidArgument,
                        "monotone functional has an axiom with a negative condition (input " +
                            std::to_string(a.input) + ")");
        }
    }
    const auto bad = check_consistency(axioms_);
    if (!bad.empty()) {
        throw Error(ErrorCode::kInconsistentFunctional,
                    "axioms " + std::to_string(bad.front().first) + " and " + std::to_string(bad.front().second) +
                        " give different outputs under a common oracle");
    }
    index();
}

void OracleFunctional::index() {
    by_input_.clear();
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
        const Nat n = axioms_[i].input;
        auto it = std::lower_bound(by_input_.begin(), by_input_.end(), n,
                                   [](const auto& entry, Nat key) { return entry.first < key; });
        if (it == by_input_.end() || it->first != n) it = by_input_.insert(it, {n, {}});
        it->second.push_back(i);
    }
}

const std::vector<std::size_t>& OracleFunctional::axioms_for(Nat n) const {
    static const std::vector<std::size_t> kNone;
    auto it = std::lower_bound(by_input_.begin(), by_input_.end(), n,
                               [](const auto& entry, Nat key) { return entry.first < key; });
    return (it == by_input_.end() || it->first != n) ? kNone : it->second;
}

Evaluation OracleFunctional::evaluate(const NatSet& oracle, Nat n) const {
    Evaluation e;
    for (std::size_t i : axioms_for(n)) {
        const Axiom& a = axioms_[i];
        if (!a.fires_on(oracle)) continue;
        if (e.value && *e.value != a.output) {
            throw Error(ErrorCode::kInconsistentFunctional,
                        "axioms " + std::to_string(*e.axiom) + " and " + std::to_string(i) +
                            " both fire on input " + std::to_string(n) + " with different outputs");
        }
        if (!e.value) {
            e.value = a.output;
            e.axiom = i;
        }
    }
    return e;
}

NatSet OracleFunctional::inputs_with_output(Color output) const {
    NatSet out;
    for (const Axiom& a : axioms_) {
        if (a.output == output) out.insert(a.input);
    }
    return out;
}

NatSet coloring_oracle(const Coloring& f) {
    NatSet out;
    for (Nat y = 1; y < f.horizon(); ++y) {
        for (Nat x = 0; x < y; ++x) {
            if (f.at(x, y) == 1) out.insert(static_cast<Nat>(pair_index(x, y)));
        }
    }
    return out;
}

ColoringTransformer::ColoringTransformer(OracleFunctional functional, Nat use_bound)
    : functional_(std::move(functional)), use_bound_(use_bound) {
    if (use_bound_ == 0) throw Error(ErrorCode::kInvalidArgument, "use bound must be positive");
    for (const Axiom& a : functional_.axioms()) {
        const Pair at = pair_at(a.input);
        const Nat bound = query_bound(at.first, at.second);
        for (const NatSet* s : {&a.positive, &a.negative}) {
            for (Nat code : *s) {
                if (pair_at(code).second >= bound) {
                    throw Error(ErrorCode::kUseBoundViolation,
                                "value at {" + std::to_string(at.first) + "," + std::to_string(at.second) +
                                    "} queries pair code " + std::to_string(code) + " beyond use bound " +
                                    std::to_string(use_bound_));
                }
            }
        }
    }
}

TransformResult apply_transformer(const ColoringTransformer& phi, const Coloring& f) {
    const Nat reach = f.horizon() / phi.use_bound();
    const NatSet oracle = coloring_oracle(f);
    std::vector<Color> values;
    values.reserve(pair_count(reach));
    std::optional<Pair> undecided;
    for (std::size_t i = 0; i < pair_count(reach); ++i) {
        const Evaluation e = phi.functional().evaluate(oracle, static_cast<Nat>(i));
        if (!e.converges()) {
            undecided = pair_at(i);
            break;
        }
        values.push_back(*e.value);
    }
    const Nat horizon = undecided ? undecided->second : reach;
    TransformResult result{Coloring(horizon), undecided};
    for (std::size_t i = 0; i < pair_count(horizon); ++i) {
        const Pair p = pair_at(i);
        result.coloring.set(p.first, p.second, values[i]);
    }
    return result;
}

namespace transformers {

namespace {

template <typename Fn>
ColoringTransformer build(Nat horizon, Fn&& axioms_for_pair) {
    std::vector<Axiom> axioms;
    for (std::size_t i = 0; i < pair_count(horizon); ++i) axioms_for_pair(static_cast<Nat>(i), axioms);
    return ColoringTransformer(OracleFunctional(std::move(axioms)), 1);
}

}  // namespace

ColoringTransformer identity(Nat horizon) {
    return build(horizon, [](Nat code, std::vector<Axiom>& out) {
        out.push_back(Axiom{code, {code}, {}, 1});
        out.push_back(Axiom{code, {}, {code}, 0});
    });
}

ColoringTransformer constant(Nat horizon, Color color) {
    return build(horizon, [color](Nat code, std::vector<Axiom>& out) { out.push_back(Axiom{code, {}, {}, color}); });
}

ColoringTransformer flip(Nat horizon) {
    return build(horizon, [](Nat code, std::vector<Axiom>& out) {
        out.push_back(Axiom{code, {code}, {}, 0});
        out.push_back(Axiom{code, {}, {code}, 1});
    });
}

}  // namespace transformers

}  // namespace ramseylab
