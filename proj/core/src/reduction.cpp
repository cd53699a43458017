// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/reduction.hpp"

#include <algorithm>

namespace ramseylab {

std::string_view to_string(Principle p) {
    switch (p) {
        case Principle::kD: return "D";
        case Principle::kSIPT: return "SIPT";
        case Principle::kSPT: return "SPT";
        case Principle::kSRT: return "SRT";
    }
    return "?";
}

std::string_view to_string(Reducibility r) {
    switch (r) {
        case Reducibility::kComputable: return "c";
        case Reducibility::kWeihrauch: return "W";
        case Reducibility::kStrongComputable: return "sc";
        case Reducibility::kStrongWeihrauch: return "sW";
    }
    return "?";
}

std::optional<Principle> parse_principle(std::string_view name) {
    for (Principle p : kAllPrinciples) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

std::optional<Reducibility> parse_reducibility(std::string_view name) {
    for (Reducibility r : kAllReducibilities) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

HomogeneityKind solution_kind(Principle p) {
    switch (p) {
        case Principle::kD: return HomogeneityKind::kLimitHomogeneous;
        case Principle::kSIPT: return HomogeneityKind::kIncreasingPHomogeneous;
        case Principle::kSPT: return HomogeneityKind::kPHomogeneous;
        case Principle::kSRT: return HomogeneityKind::kHomogeneous;
    }
    return HomogeneityKind::kHomogeneous;
}

bool is_solution(const Coloring& f, Principle p, const NatSet& solution) {
    const HomogeneityKind kind = solution_kind(p);
    if (p == Principle::kSPT || p == Principle::kSIPT) {
        return check_homogeneity(f, JoinedSet(solution), kind).holds();
    }
    return check_homogeneity(f, solution, kind).holds();
}

namespace {

GreedyHomogeneous greedy_thin(const Coloring& f, const NatSet& l, Color i) {
    GreedyHomogeneous out;
    for (Nat candidate : l) {
        const bool admissible = std::all_of(out.elements.begin(), out.elements.end(),
                                            [&](Nat h) { return f.at(h, candidate) == i; });
        if (admissible) {
            out.elements.push_back(candidate);
        } else {
            out.rejected.push_back(candidate);
        }
    }
    return out;
}

}  // namespace

GreedyHomogeneous limit_to_homogeneous(const Coloring& f, const NatSet& l, Color i) {
    if (!l.empty() && *l.rbegin() >= f.horizon()) {
        throw Error(ErrorCode::kOutOfHorizon, "element " + std::to_string(*l.rbegin()) + " is outside horizon " +
                                                  std::to_string(f.horizon()));
    }
    for (Nat x : l) {
        const auto& limit = f.limit(x);
        if (!limit) throw Error(ErrorCode::kMissingLimit, "no limit annotation for element " + std::to_string(x));
        if (limit->color != i) {
            throw Error(ErrorCode::kPreconditionViolated, "element " + std::to_string(x) + " has limit color " +
                                                              std::to_string(limit->color) + ", expected " +
                                                              std::to_string(i));
        }
    }
    return greedy_thin(f, l, i);
}

IptReduction ipt_to_homogeneous(const Coloring& f, const JoinedSet& z) {
    const HomogeneityResult check = check_homogeneity(f, z, HomogeneityKind::kIncreasingPHomogeneous);
    if (check.verdict == Verdict::kFails) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "joined set is not increasing p-homogeneous (pair {" +
                        std::to_string(check.counterexample->first) + "," +
                        std::to_string(check.counterexample->second) + "})");
    }
    const auto [left, right] = decode_join(z);
    if (left.empty()) throw Error(ErrorCode::kInsufficientWitness, "left column is empty");
    const Nat i0 = *left.begin();
    const auto above = right.upper_bound(i0);
    if (above == right.end()) {
        throw Error(ErrorCode::kInsufficientWitness,
                    "no right-column element above the left minimum " + std::to_string(i0));
    }
    IptReduction out;
    out.left_min = i0;
    out.right_witness = *above;
    out.color = f.at(i0, *above);
    // The left column is limit homogeneous with this color for a genuine
    // (infinite) solution; at finite horizon the greedy pass alone is sound.
    out.homogeneous = greedy_thin(f, left, out.color);
    return out;
}

JoinedSet homogeneous_to_p(const NatSet& h) { return JoinedSet::encode(h, h); }

NatSet forward_chain(Principle from, Principle to, const NatSet& solution) {
    const auto rank = [](Principle p) { return static_cast<int>(p); };
    if (rank(to) > rank(from)) {
        throw Error(ErrorCode::kUnknownKind, "no forward map from " + std::string(to_string(from)) + " to " +
                                                 std::string(to_string(to)));
    }
    NatSet current = solution;
    for (Principle at = from; at != to;) {
        switch (at) {
            case Principle::kSRT:
                current = homogeneous_to_p(current).codes();
                at = Principle::kSPT;
                break;
            case Principle::kSPT:
                at = Principle::kSIPT;
                break;
            case Principle::kSIPT:
                current = JoinedSet(current).left();
                at = Principle::kD;
                break;
            case Principle::kD:
                throw Error(ErrorCode::kUnknownKind, "D has no forward map");
        }
    }
    return current;
}

std::string_view to_string(RelationStatus s) { return s == RelationStatus::kHolds ? "holds" : "fails"; }

std::string_view to_string(RelationBasis b) {
    switch (b) {
        case RelationBasis::kReflexive: return "reflexive";
        case RelationBasis::kCited: return "cited";
        case RelationBasis::kImplication: return "implication";
        case RelationBasis::kComposition: return "composition";
    }
    return "?";
}

namespace {

std::size_t idx(Principle p) { return static_cast<std::size_t>(p); }
std::size_t idx(Reducibility r) { return static_cast<std::size_t>(r); }

}  // namespace

const RelationEntry& RelationMatrix::at(Principle reduced, Principle target, Reducibility r) const {
    const auto& e = entries_[idx(reduced)][idx(target)][idx(r)];
    if (!e) {
        throw Error(ErrorCode::kInvalidArgument, "relation " + std::string(to_string(reduced)) + " <=" +
                                                     std::string(to_string(r)) + " " +
                                                     std::string(to_string(target)) + " is undetermined");
    }
    return *e;
}

RelationEntry& RelationMatrix::at(Principle reduced, Principle target, Reducibility r) {
    auto& e = entries_[idx(reduced)][idx(target)][idx(r)];
    if (!e) e.emplace();
    return *e;
}

std::vector<std::string> RelationMatrix::closure_violations() const {
    std::vector<std::string> out;
    const auto holds = [&](Principle p, Principle q, Reducibility r) {
        return at(p, q, r).status == RelationStatus::kHolds;
    };
    const auto name = [](Principle p, Principle q, Reducibility r) {
        return std::string(to_string(p)) + " <=" + std::string(to_string(r)) + " " + std::string(to_string(q));
    };
    using R = Reducibility;
    const std::array<std::pair<R, R>, 4> implications = {
        {{R::kStrongWeihrauch, R::kStrongComputable},
         {R::kStrongWeihrauch, R::kWeihrauch},
         {R::kStrongComputable, R::kComputable},
         {R::kWeihrauch, R::kComputable}}};
    for (Principle p : kAllPrinciples) {
        for (Principle q : kAllPrinciples) {
            for (const auto& [strong, weak] : implications) {
                if (holds(p, q, strong) && !holds(p, q, weak)) {
                    out.push_back(name(p, q, strong) + " holds but " + name(p, q, weak) + " fails");
                }
            }
        }
    }
    return out;
}

namespace {

class MatrixBuilder {
public:
    using Cell = std::optional<RelationEntry>;

    Cell& cell(Principle p, Principle q, Reducibility r) { return cells_[idx(p)][idx(q)][idx(r)]; }

    void seed(Principle p, Principle q, Reducibility r, RelationStatus s, RelationBasis b, std::string cite) {
        cell(p, q, r) = RelationEntry{s, b, std::move(cite)};
    }

    bool derive(Principle p, Principle q, Reducibility r, RelationStatus s, RelationBasis b, std::string cite) {
        Cell& c = cell(p, q, r);
        if (c) {
            if (c->status != s) {
                throw Error(ErrorCode::kInvalidArgument, "contradictory relation data for " +
                                                             std::string(to_string(p)) + " <=" +
                                                             std::string(to_string(r)) + " " +
                                                             std::string(to_string(q)));
            }
            return false;
        }
        c = RelationEntry{s, b, std::move(cite)};
        return true;
    }

    bool is(Principle p, Principle q, Reducibility r, RelationStatus s) {
        const Cell& c = cell(p, q, r);
        return c && c->status == s;
    }

    void close() {
        using R = Reducibility;
        const auto H = RelationStatus::kHolds;
        const auto F = RelationStatus::kFails;
        const std::array<std::pair<R, R>, 4> implications = {
            {{R::kStrongWeihrauch, R::kStrongComputable},
             {R::kStrongWeihrauch, R::kWeihrauch},
             {R::kStrongComputable, R::kComputable},
             {R::kWeihrauch, R::kComputable}}};
        bool changed = true;
        while (changed) {
            changed = false;
            for (Principle p : kAllPrinciples) {
                for (Principle q : kAllPrinciples) {
                    for (const auto& [strong, weak] : implications) {
                        if (is(p, q, strong, H)) {
                            changed |= derive(p, q, weak, H, RelationBasis::kImplication,
                                              label(p, q, strong) + " implies " + label(p, q, weak));
                        }
                        if (is(p, q, weak, F)) {
                            changed |= derive(p, q, strong, F, RelationBasis::kImplication,
                                              "not " + label(p, q, weak) + " implies not " + label(p, q, strong));
                        }
                    }
                }
            }
            for (Reducibility r : kAllReducibilities) {
                for (Principle p : kAllPrinciples) {
                    for (Principle q : kAllPrinciples) {
                        for (Principle m : kAllPrinciples) {
                            if (is(p, m, r, H) && is(m, q, r, H)) {
                                changed |= derive(p, q, r, H, RelationBasis::kComposition,
                                                  label(p, m, r) + " and " + label(m, q, r));
                            }
                            // p <= m and p not<= q force m not<= q.
                            if (is(p, m, r, H) && is(p, q, r, F)) {
                                changed |= derive(m, q, r, F, RelationBasis::kComposition,
                                                  label(p, m, r) + " and not " + label(p, q, r));
                            }
                            // m <= q and p not<= q force p not<= m.
                            if (is(m, q, r, H) && is(p, q, r, F)) {
                                changed |= derive(p, m, r, F, RelationBasis::kComposition,
                                                  label(m, q, r) + " and not " + label(p, q, r));
                            }
                        }
                    }
                }
            }
        }
    }

    RelationMatrix finish() {
        RelationMatrix m;
        for (Principle p : kAllPrinciples) {
            for (Principle q : kAllPrinciples) {
                for (Reducibility r : kAllReducibilities) {
                    if (cell(p, q, r)) m.at(p, q, r) = *cell(p, q, r);
                }
            }
        }
        return m;
    }

    static std::string label(Principle p, Principle q, Reducibility r) {
        return std::string(to_string(p)) + " <=" + std::string(to_string(r)) + " " + std::string(to_string(q));
    }

private:
    std::array<std::array<std::array<Cell, 4>, 4>, 4> cells_{};
};

}  // namespace

RelationMatrix relation_matrix() {
    using P = Principle;
    using R = Reducibility;
    const auto H = RelationStatus::kHolds;
    const auto F = RelationStatus::kFails;
    MatrixBuilder b;
    for (P p : kAllPrinciples) {
        for (R r : kAllReducibilities) b.seed(p, p, r, H, RelationBasis::kReflexive, "identity reduction");
    }
    const std::string chain = "Abstract: D22 <=sW SIPT22 <=sW SPT22 <=sW SRT22";
    b.seed(P::kD, P::kSIPT, R::kStrongWeihrauch, H, RelationBasis::kCited, chain);
    b.seed(P::kSIPT, P::kSPT, R::kStrongWeihrauch, H, RelationBasis::kCited, chain);
    b.seed(P::kSPT, P::kSRT, R::kStrongWeihrauch, H, RelationBasis::kCited, chain);
    const std::string prop = "Prop 1.5: SRT22 <=W SPT22 <=W SIPT22";
    b.seed(P::kSRT, P::kSPT, R::kWeihrauch, H, RelationBasis::kCited, prop);
    b.seed(P::kSPT, P::kSIPT, R::kWeihrauch, H, RelationBasis::kCited, prop);
    b.seed(P::kSIPT, P::kD, R::kComputable, H, RelationBasis::kCited, "Summary diagram: SIPT22 <=c D22");
    b.seed(P::kSIPT, P::kD, R::kStrongComputable, F, RelationBasis::kCited, "Thm 1.7: SIPT22 not<=sc D22");
    b.seed(P::kSRT, P::kSPT, R::kStrongComputable, F, RelationBasis::kCited, "Thm 1.8: SRT22 not<=sc SPT22");
    b.seed(P::kSPT, P::kSIPT, R::kStrongComputable, F, RelationBasis::kCited, "Thm 1.9: SPT22 not<=sc SIPT22");
    b.seed(P::kSRT, P::kD, R::kWeihrauch, F, RelationBasis::kCited, "Dzhafarov: SRT22 not<=W D22");
    b.seed(P::kSRT, P::kD, R::kStrongComputable, F, RelationBasis::kCited, "Dzhafarov: SRT22 not<=sc D22");
    b.close();
    return b.finish();
}

}  // namespace ramseylab
