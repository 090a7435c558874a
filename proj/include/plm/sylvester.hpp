#pragma once

#include "plm/bst.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plm {

// Equal labels go left: left subtree <= node < right subtree.
class RightStrictBst : private BinaryTree {
public:
    RightStrictBst() = default;
    // Throws std::invalid_argument if t is not right strict.
    explicit RightStrictBst(BinaryTree t);

    using BinaryTree::canopy;
    using BinaryTree::depth;
    using BinaryTree::draw;
    using BinaryTree::empty;
    using BinaryTree::evaluation;
    using BinaryTree::is_ancestor;
    using BinaryTree::label;
    using BinaryTree::left;
    using BinaryTree::leftmost;
    using BinaryTree::node_count;
    using BinaryTree::nodes_with_label;
    using BinaryTree::parent;
    using BinaryTree::postfix_reading;
    using BinaryTree::postorder;
    using BinaryTree::right;
    using BinaryTree::rightmost;
    using BinaryTree::root;
    using BinaryTree::serialize;
    using BinaryTree::size;

    BinaryTree const& tree() const noexcept { return *this; }
    std::string key() const { return serialize(); }

    friend bool operator==(RightStrictBst const& a, RightStrictBst const& b) { return a.tree() == b.tree(); }

    static bool valid(BinaryTree const& t);

private:
    friend RightStrictBst sylv_insert(RightStrictBst t, Letter a);
};

RightStrictBst sylv_insert(RightStrictBst t, Letter a);
// Inserts right to left.
RightStrictBst p_sylv(Word const& w);

// Every word obtained by emitting nodes children-first; for a right strict tree these are
// exactly the words w with p_sylv(w) = t. Sorted.
std::vector<Word> readings(BinaryTree const& t);

// Topmost nodes unique per label, equal labels on one path, only topmost nodes have right
// subtrees, a non-topmost left child sits under an equal label.
bool satisfies_structure_lemmas(RightStrictBst const& t);

struct NodeClasses {
    std::vector<NodeId> primary;
    std::vector<NodeId> secondary;
    std::vector<NodeId> tertiary;
};
NodeClasses classify_nodes(BinaryTree const& t, Letter a);

struct PlanStep {
    NodeId node;  // u_h in U
    Letter u;
    Letter m;
    std::optional<Letter> p;
    std::optional<Letter> q;
    RightStrictBst B, C, D, E;
    std::vector<std::size_t> up;  // plan indices of the nodes in U_h that are not below another, increasing
};
using TraversalPlan = std::vector<PlanStep>;

// One step per topmost node of u, in left-to-right postfix order.
TraversalPlan traversal_plan(RightStrictBst const& u);

// Checks P1-P4 for t against the first h+1 steps of the plan (h is a plan index).
bool satisfies_path_conditions(RightStrictBst const& t, TraversalPlan const& plan, std::size_t h,
                               std::string* why = nullptr);

struct SylvStep {
    std::string rule;  // "base 1", "1(a)", ..., "4(d)(6)"
    Word left;         // previous tree is p_sylv(left·right), next is p_sylv(right·left)
    Word right;
};

struct SylvPath {
    std::vector<RightStrictBst> trees;  // consecutive duplicates removed
    std::vector<SylvStep> steps;        // one per topmost node of the target, identity steps included
};

// Throws std::invalid_argument when evaluations differ and std::logic_error if a step
// fails its own checks.
SylvPath sylv_path(RightStrictBst const& t, RightStrictBst const& u);

}  // namespace plm
