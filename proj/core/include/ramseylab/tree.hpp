// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramseylab/functional.hpp"
#include "ramseylab/types.hpp"

namespace ramseylab {

enum class Arity { kTwo = 2, kThree = 3 };
/// kPlain queries Γ at a, b (, c); kShifted at 2a+1, 2b (, 2c+1).
enum class ParityVariant { kPlain, kShifted };

std::string_view to_string(ParityVariant v);
std::optional<ParityVariant> parse_parity_variant(std::string_view name);

struct TreeParams {
    Nat k{0};
    OracleFunctional gamma;
    NatSet h;                    // joined segment, as codes
    std::vector<Nat> reservoir;  // strictly increasing, decoded H below it
    Arity arity{Arity::kTwo};
    ParityVariant variant{ParityVariant::kPlain};
    Nat depth_cap{4};
};

using Path = std::vector<Nat>;

/// A label entry; nullopt stands for ∞.
using LabelEntry = std::optional<Nat>;
using Label = std::vector<LabelEntry>;

std::string format_label(const Label& label);
std::string format_path(const Path& path);
std::size_t infinity_count(const Label& label);

/// Functional input whose convergence to 1 puts v at `position` of a value tuple.
Nat query_input(ParityVariant variant, std::size_t position, Nat v);

struct Witness {
    NatSet left;               // F_L
    NatSet right;              // F_R
    std::vector<Nat> values;   // increasing, all queries converge to 1

    NatSet joined() const;     // F_L (+) F_R as codes
    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class NodeKind { kWitnessTerminal, kDepthExhausted, kInternal };
std::string_view to_string(NodeKind kind);

/// A set of joined finite sets.
using SortValue = std::set<NatSet>;

struct TreeNode {
    Path path;
    NodeKind kind{NodeKind::kInternal};
    std::optional<Label> label;
    std::optional<Witness> witness;  // least witness over ran(path); terminal nodes only
    std::optional<SortValue> sort;
    std::vector<std::size_t> children;  // ascending by appended element
};

class LabeledTree {
public:
    LabeledTree() = default;

    const TreeParams& params() const noexcept { return params_; }
    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    const TreeNode& node(std::size_t i) const { return nodes_.at(i); }
    TreeNode& node(std::size_t i) { return nodes_.at(i); }
    static constexpr std::size_t root() noexcept { return 0; }

    std::optional<std::size_t> find(const Path& path) const;
    const TreeNode& at(const Path& path) const;
    std::size_t size() const noexcept { return nodes_.size(); }

    /// Adds a node; its parent (path minus last element) must already exist.
    std::size_t add(TreeNode node);

    explicit LabeledTree(TreeParams params) : params_(std::move(params)) {}

private:
    TreeParams params_;
    std::vector<TreeNode> nodes_;
    std::map<Path, std::size_t> index_;
};

/// Least witness (lexicographic on the value tuple, then first (F_L, F_R) in
/// mask order) with F_L, F_R ⊆ range.
std::optional<Witness> find_witness(const TreeParams& params, const NatSet& range);

/// The tree of increasing strings over the reservoir with no witness over
/// ran(α#), up to the depth cap. Throws kInvalidArgument on bad parameters.
LabeledTree build_tree(const TreeParams& params);

/// Explicit threshold, or nullopt for a strict majority of the count at hand.
using Threshold = std::optional<Nat>;
Nat threshold_for(Threshold theta, std::size_t count);

/// Labels every node bottom-up. Throws kUnlabelableTree on a depth-exhausted node.
LabeledTree label_tree(LabeledTree tree, Threshold theta = std::nullopt);

/// Lexicographically least depth-exhausted node, if any.
std::optional<Path> depth_exhausted_path(const LabeledTree& tree);

/// T^L of a labeled tree.
LabeledTree labeled_subtree(const LabeledTree& tree, Threshold theta = std::nullopt);

std::vector<Path> transition_nodes(const LabeledTree& tree, bool revised);
bool is_transition_node(const LabeledTree& tree, std::size_t node, bool revised);

/// Sort values for every node. Throws kUnsupported for arity two.
LabeledTree compute_sort(LabeledTree tree, Threshold theta = std::nullopt);

enum class Configuration { kI, kII, kIII };
std::string_view to_string(Configuration c);

/// Some member of Sort(α) puts x and y both in F_L, both in F_R, or leaves
/// one of them out. Throws kInvalidArgument unless x, y ∈ ran(α) and the
/// sort is computed.
bool share_column(const LabeledTree& tree, const Path& alpha, Nat x, Nat y);
std::set<Configuration> configuration(const LabeledTree& tree, const Path& alpha, Nat x, Nat y);

/// Removes every non-terminal proper extension of α failing the predicate,
/// with all of its extensions.
LabeledTree prune(const LabeledTree& tree, const Path& alpha,
                  const std::function<bool(const TreeNode&)>& keep);

std::string to_dot(const LabeledTree& tree);

}  // namespace ramseylab
