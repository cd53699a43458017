// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramseylab/tree.hpp"

#include <algorithm>
#include <sstream>

namespace ramseylab {

std::string_view to_string(ParityVariant v) { return v == ParityVariant::kPlain ? "plain" : "shifted"; }

std::optional<ParityVariant> parse_parity_variant(std::string_view name) {
    if (name == "plain") return ParityVariant::kPlain;
    if (name == "shifted") return ParityVariant::kShifted;
    return std::nullopt;
}

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::kWitnessTerminal: return "witness-terminal";
        case NodeKind::kDepthExhausted: return "depth-exhausted";
        case NodeKind::kInternal: return "internal";
    }
    return "?";
}

std::string_view to_string(Configuration c) {
    switch (c) {
        case Configuration::kI: return "I";
        case Configuration::kII: return "II";
        case Configuration::kIII: return "III";
    }
    return "?";
}

std::string format_label(const Label& label) {
    std::string out = "⟨";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) out += ",";
        out += label[i] ? std::to_string(*label[i]) : "∞";
    }
    return out + "⟩";
}

std::string format_path(const Path& path) {
    std::string out = "⟨";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(path[i]);
    }
    return out + "⟩";
}

std::size_t infinity_count(const Label& label) {
    return static_cast<std::size_t>(std::count(label.begin(), label.end(), std::nullopt));
}

NatSet Witness::joined() const { return JoinedSet::encode(left, right).codes(); }

std::optional<std::size_t> LabeledTree::find(const Path& path) const {
    const auto it = index_.find(path);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const TreeNode& LabeledTree::at(const Path& path) const {
    const auto i = find(path);
    if (!i) throw Error(ErrorCode::kInvalidArgument, "node " + format_path(path) + " is not in the tree");
    return nodes_[*i];
}

std::size_t LabeledTree::add(TreeNode node) {
    const std::size_t id = nodes_.size();
    if (!node.path.empty()) {
        const Path parent(node.path.begin(), node.path.end() - 1);
        const auto p = find(parent);
        if (!p) throw Error(ErrorCode::kInvalidArgument, "parent of " + format_path(node.path) + " is missing");
        nodes_[*p].children.push_back(id);
    } else if (!nodes_.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "tree already has a root");
    }
    node.children.clear();
    index_.emplace(node.path, id);
    nodes_.push_back(std::move(node));
    return id;
}

Nat query_input(ParityVariant variant, std::size_t position, Nat v) {
    if (variant == ParityVariant::kPlain) return v;
    return position % 2 == 0 ? 2 * v + 1 : 2 * v;
}

namespace {

// Value v queried at `position` by input n, if any.
std::optional<Nat> query_value(ParityVariant variant, std::size_t position, Nat n) {
    if (variant == ParityVariant::kPlain) return n;
    const bool odd_position = position % 2 == 0;
    if ((n % 2 == 1) != odd_position) return std::nullopt;
    return n / 2;
}

// Lexicographically least increasing tuple with tuple[p] ∈ sets[p].
bool least_tuple(const std::vector<NatSet>& sets, std::size_t p, std::optional<Nat> floor, std::vector<Nat>& out) {
    if (p == sets.size()) return true;
    auto it = floor ? sets[p].upper_bound(*floor) : sets[p].begin();
    for (; it != sets[p].end(); ++it) {
        out[p] = *it;
        if (least_tuple(sets, p + 1, *it, out)) return true;
    }
    return false;
}

NatSet from_mask(const std::vector<Nat>& elements, std::uint64_t mask) {
    NatSet out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (mask >> i & 1u) out.insert(elements[i]);
    }
    return out;
}

}  // namespace

std::optional<Witness> find_witness(const TreeParams& params, const NatSet& range) {
    const std::size_t arity = static_cast<std::size_t>(params.arity);
    NatSet queried;
    for (const Axiom& a : params.gamma.axioms()) {
        queried.insert(a.positive.begin(), a.positive.end());
        queried.insert(a.negative.begin(), a.negative.end());
    }
    // Elements whose membership no axiom reads never change an outcome; the
    // first witness in mask order leaves them out anyway.
    std::vector<Nat> left_rel;
    std::vector<Nat> right_rel;
    for (Nat x : range) {
        if (queried.contains(2 * x)) left_rel.push_back(x);
        if (queried.contains(2 * x + 1)) right_rel.push_back(x);
    }
    if (left_rel.size() + right_rel.size() >= 40) {
        throw Error(ErrorCode::kUnsupported, "witness search over too many relevant elements");
    }
    const NatSet inputs = params.gamma.inputs_with_output(1);
    std::optional<Witness> best;
    std::vector<Nat> tuple(arity);
    for (std::uint64_t ml = 0; ml < (std::uint64_t{1} << left_rel.size()); ++ml) {
        for (std::uint64_t mr = 0; mr < (std::uint64_t{1} << right_rel.size()); ++mr) {
            const NatSet fl = from_mask(left_rel, ml);
            const NatSet fr = from_mask(right_rel, mr);
            NatSet oracle = params.h;
            for (Nat x : fl) oracle.insert(2 * x);
            for (Nat y : fr) oracle.insert(2 * y + 1);
            std::vector<NatSet> sets(arity);
            for (Nat n : inputs) {
                const Evaluation e = params.gamma.evaluate(oracle, n);
                if (e.value != Color{1}) continue;
                for (std::size_t p = 0; p < arity; ++p) {
                    const auto v = query_value(params.variant, p, n);
                    if (v && *v >= params.k) sets[p].insert(*v);
                }
            }
            if (!least_tuple(sets, 0, std::nullopt, tuple)) continue;
            if (!best || tuple < best->values) best = Witness{fl, fr, tuple};
        }
    }
    return best;
}

namespace {

void validate_params(const TreeParams& params) {
    for (std::size_t i = 1; i < params.reservoir.size(); ++i) {
        if (params.reservoir[i] <= params.reservoir[i - 1]) {
            throw Error(ErrorCode::kInvalidArgument, "reservoir must be strictly increasing");
        }
    }
    if (!params.h.empty() && !params.reservoir.empty() && *params.h.rbegin() / 2 >= params.reservoir.front()) {
        throw Error(ErrorCode::kInvalidArgument, "segment element " + std::to_string(*params.h.rbegin() / 2) +
                                                     " is not below the reservoir");
    }
}

void grow(LabeledTree& tree, const Path& alpha) {
    const TreeParams& params = tree.params();
    TreeNode node;
    node.path = alpha;
    node.witness = find_witness(params, NatSet(alpha.begin(), alpha.end()));
    std::vector<Nat> next;
    if (node.witness) {
        node.kind = NodeKind::kWitnessTerminal;
    } else if (alpha.size() < params.depth_cap) {
        for (Nat x : params.reservoir) {
            if (alpha.empty() || x > alpha.back()) next.push_back(x);
        }
        node.kind = next.empty() ? NodeKind::kDepthExhausted : NodeKind::kInternal;
    } else {
        node.kind = NodeKind::kDepthExhausted;
    }
    tree.add(std::move(node));
    for (Nat x : next) {
        Path child = alpha;
        child.push_back(x);
        grow(tree, child);
    }
}

}  // namespace

LabeledTree build_tree(const TreeParams& params) {
    validate_params(params);
    LabeledTree tree(params);
    grow(tree, {});
    return tree;
}

Nat threshold_for(Threshold theta, std::size_t count) {
    if (theta) {
        if (*theta == 0) throw Error(ErrorCode::kInvalidArgument, "threshold must be at least 1");
        return *theta;
    }
    return static_cast<Nat>(count / 2 + 1);
}

namespace {

Label label_from_children(const std::vector<const Label*>& children, std::size_t arity, Nat thr) {
    Label label(arity);
    for (std::size_t j = arity; j-- > 0;) {
        std::map<Nat, std::size_t> counts;
        bool later_finite = false;
        for (std::size_t t = j + 1; t < arity; ++t) later_finite |= label[t].has_value();
        for (const Label* l : children) {
            bool matches = true;
            for (std::size_t t = j + 1; t < arity; ++t) {
                if (label[t] && (*l)[t] != label[t]) matches = false;
            }
            if (matches && (*l)[j]) ++counts[*(*l)[j]];
        }
        for (const auto& [v, n] : counts) {
            if (n >= thr) {
                label[j] = v;
                break;
            }
        }
        if (!label[j] && later_finite && !counts.empty()) {
            // Keep finite entries below a finite later entry: plurality.
            auto best = counts.begin();
            for (auto it = counts.begin(); it != counts.end(); ++it) {
                if (it->second > best->second) best = it;
            }
            label[j] = best->first;
        }
    }
    return label;
}

}  // namespace

LabeledTree label_tree(LabeledTree tree, Threshold theta) {
    const std::size_t arity = static_cast<std::size_t>(tree.params().arity);
    for (std::size_t i = tree.size(); i-- > 0;) {
        TreeNode& node = tree.node(i);
        switch (node.kind) {
            case NodeKind::kDepthExhausted:
                throw Error(ErrorCode::kUnlabelableTree,
                            "node " + format_path(node.path) + " is depth-exhausted; the tree may be ill-founded");
            case NodeKind::kWitnessTerminal:
                node.label = Label(node.witness->values.begin(), node.witness->values.end());
                break;
            case NodeKind::kInternal: {
                std::vector<const Label*> labels;
                for (std::size_t c : node.children) labels.push_back(&*tree.node(c).label);
                node.label = label_from_children(labels, arity, threshold_for(theta, labels.size()));
                break;
            }
        }
    }
    return tree;
}

std::optional<Path> depth_exhausted_path(const LabeledTree& tree) {
    std::optional<Path> best;
    for (const TreeNode& n : tree.nodes()) {
        if (n.kind == NodeKind::kDepthExhausted && (!best || n.path < *best)) best = n.path;
    }
    return best;
}

namespace {

std::vector<std::size_t> kept_children(const LabeledTree& tree, const TreeNode& node, Threshold theta) {
    const Label& label = *node.label;
    const Nat thr = threshold_for(theta, node.children.size());
    std::size_t prefix = 0;
    while (prefix < label.size() && label[prefix]) ++prefix;
    const std::size_t inf = label.size() - prefix;
    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < inf; ++e) {
        std::vector<std::size_t> group;
        for (std::size_t c : node.children) {
            const Label& l = *tree.node(c).label;
            if (infinity_count(l) == e && std::equal(label.begin(), label.begin() + prefix, l.begin())) {
                group.push_back(c);
            }
        }
        if (group.size() < thr) continue;
        std::set<Label> seen;
        for (std::size_t c : group) {
            if (seen.insert(*tree.node(c).label).second) kept.push_back(c);
        }
        return kept;
    }
    for (std::size_t c : node.children) {
        if (*tree.node(c).label == label) kept.push_back(c);
    }
    return kept;
}

void copy_kept(const LabeledTree& from, std::size_t id, LabeledTree& to, Threshold theta) {
    const TreeNode& node = from.node(id);
    to.add(node);
    if (node.kind != NodeKind::kInternal) return;
    for (std::size_t c : kept_children(from, node, theta)) copy_kept(from, c, to, theta);
}

}  // namespace

LabeledTree labeled_subtree(const LabeledTree& tree, Threshold theta) {
    LabeledTree out(tree.params());
    if (tree.size() == 0) return out;
    for (const TreeNode& n : tree.nodes()) {
        if (!n.label) throw Error(ErrorCode::kInvalidArgument, "tree is not labeled");
    }
    copy_kept(tree, LabeledTree::root(), out, theta);
    return out;
}

bool is_transition_node(const LabeledTree& tree, std::size_t id, bool revised) {
    const TreeNode& node = tree.node(id);
    if (!node.label || node.children.empty()) return false;
    const std::size_t inf = infinity_count(*node.label);
    if (inf == 0) return false;
    return std::all_of(node.children.begin(), node.children.end(), [&](std::size_t c) {
        const std::size_t ci = infinity_count(*tree.node(c).label);
        return ci < inf && (!revised || ci <= 1);
    });
}

std::vector<Path> transition_nodes(const LabeledTree& tree, bool revised) {
    std::vector<Path> out;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (is_transition_node(tree, i, revised)) out.push_back(tree.node(i).path);
    }
    return out;
}

LabeledTree compute_sort(LabeledTree tree, Threshold theta) {
    if (tree.params().arity != Arity::kThree) {
        throw Error(ErrorCode::kUnsupported, "Sort is defined for three-label trees only");
    }
    for (std::size_t i = tree.size(); i-- > 0;) {
        TreeNode& node = tree.node(i);
        SortValue sort;
        if (node.kind == NodeKind::kWitnessTerminal) {
            sort.insert(node.witness->joined());
        } else {
            std::map<SortValue, std::size_t> counts;
            for (std::size_t c : node.children) ++counts[*tree.node(c).sort];
            const Nat thr = threshold_for(theta, node.children.size());
            for (const auto& [value, n] : counts) {
                if (n >= thr) sort.insert(value.begin(), value.end());
            }
        }
        node.sort = std::move(sort);
    }
    return tree;
}

namespace {

const SortValue& sort_for(const LabeledTree& tree, const Path& alpha, Nat x, Nat y) {
    const TreeNode& node = tree.at(alpha);
    if (!node.sort) throw Error(ErrorCode::kInvalidArgument, "Sort of " + format_path(alpha) + " is not computed");
    for (Nat e : {x, y}) {
        if (std::find(alpha.begin(), alpha.end(), e) == alpha.end()) {
            throw Error(ErrorCode::kInvalidArgument,
                        std::to_string(e) + " is not in the range of " + format_path(alpha));
        }
    }
    return *node.sort;
}

bool shares(const NatSet& m, Nat x, Nat y) {
    const auto placed = [&](Nat e) { return m.contains(2 * e) || m.contains(2 * e + 1); };
    return (m.contains(2 * x) && m.contains(2 * y)) || (m.contains(2 * x + 1) && m.contains(2 * y + 1)) ||
           !placed(x) || !placed(y);
}

}  // namespace

bool share_column(const LabeledTree& tree, const Path& alpha, Nat x, Nat y) {
    const SortValue& sort = sort_for(tree, alpha, x, y);
    return std::any_of(sort.begin(), sort.end(), [&](const NatSet& m) { return shares(m, x, y); });
}

std::set<Configuration> configuration(const LabeledTree& tree, const Path& alpha, Nat x, Nat y) {
    std::set<Configuration> out;
    for (const NatSet& m : sort_for(tree, alpha, x, y)) {
        if (m.contains(2 * x + 1) && m.contains(2 * y)) out.insert(Configuration::kI);
        if (shares(m, x, y)) out.insert(Configuration::kII);
        if (m.contains(2 * x) && m.contains(2 * y + 1)) out.insert(Configuration::kIII);
    }
    return out;
}

namespace {

bool proper_extension(const Path& beta, const Path& alpha) {
    return beta.size() > alpha.size() && std::equal(alpha.begin(), alpha.end(), beta.begin());
}

void copy_pruned(const LabeledTree& from, std::size_t id, LabeledTree& to, const Path& alpha,
                 const std::function<bool(const TreeNode&)>& keep) {
    const TreeNode& node = from.node(id);
    if (proper_extension(node.path, alpha) && node.kind != NodeKind::kWitnessTerminal && !keep(node)) return;
    to.add(node);
    for (std::size_t c : node.children) copy_pruned(from, c, to, alpha, keep);
}

}  // namespace

LabeledTree prune(const LabeledTree& tree, const Path& alpha, const std::function<bool(const TreeNode&)>& keep) {
    tree.at(alpha);
    LabeledTree out(tree.params());
    copy_pruned(tree, LabeledTree::root(), out, alpha, keep);
    return out;
}

std::string to_dot(const LabeledTree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const TreeNode& n = tree.node(i);
        out << "  n" << i << " [label=\"" << format_path(n.path) << " | "
            << (n.label ? format_label(*n.label) : std::string("-")) << " | " << to_string(n.kind) << "\"];\n";
    }
    for (std::size_t i = 0; i < tree.size(); ++i) {
        for (std::size_t c : tree.node(i).children) out << "  n" << i << " -> n" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ramseylab
