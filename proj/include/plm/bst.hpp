#pragma once

#include "plm/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plm {

using NodeId = std::int32_t;
inline constexpr NodeId no_node = -1;

struct Node {
    Letter label = 0;
    std::size_t multiplicity = 1;
    NodeId left = no_node;
    NodeId right = no_node;
    NodeId parent = no_node;
};

// Arena-backed binary tree. Node ids are stable; nodes are never removed in place,
// derived trees are built by copying.
class BinaryTree {
public:
    BinaryTree() = default;

    bool empty() const noexcept { return root_ == no_node; }
    NodeId root() const noexcept { return root_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    Node const& operator[](NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    Letter label(NodeId id) const { return (*this)[id].label; }
    NodeId left(NodeId id) const { return (*this)[id].left; }
    NodeId right(NodeId id) const { return (*this)[id].right; }
    NodeId parent(NodeId id) const { return (*this)[id].parent; }

    NodeId add_root(Letter a, std::size_t mult = 1);
    NodeId add_child(NodeId parent, bool as_left, Letter a, std::size_t mult = 1);
    void bump(NodeId id) { ++nodes_.at(static_cast<std::size_t>(id)).multiplicity; }

    std::size_t depth(NodeId id) const;
    bool is_ancestor(NodeId anc, NodeId id) const;  // reflexive
    std::vector<NodeId> postorder() const;
    std::vector<NodeId> postorder(NodeId from) const;
    std::vector<NodeId> nodes_with_label(Letter a) const;  // top to bottom
    NodeId leftmost(NodeId from) const;
    NodeId rightmost(NodeId from) const;

    // Children before parents, each multiplicity expanded.
    Word postfix_reading() const;
    Word labels_sorted() const;
    Evaluation evaluation(std::size_t rank) const;
    std::size_t size() const;  // number of symbols, counting multiplicity

    // Copy of the complete subtree at `from`, skipping nodes in `drop` (whose children
    // must also be dropped).
    BinaryTree copy_subtree(NodeId from, std::vector<NodeId> const& drop = {}) const;

    // label(left)(right) with "·" for an empty subtree; "label^m" when show_mult.
    std::string serialize(bool show_mult = false) const;
    // Sideways drawing, right subtree on top.
    std::string draw(bool show_mult = false) const;
    // Empty left subtrees give 1, empty right subtrees 0, read left to right without the
    // first and last.
    std::string canopy() const;

    friend bool operator==(BinaryTree const& a, BinaryTree const& b);

private:
    std::vector<Node> nodes_;
    NodeId root_ = no_node;
};

// Embedding of `pattern` as a rooted subtree of `t` with pattern's root at `at`;
// result[i] is the image of pattern node i, or empty if labels/shape do not match.
std::vector<NodeId> embed(BinaryTree const& pattern, BinaryTree const& t, NodeId at);

}  // namespace plm
