#pragma once

#include "plm/bst.hpp"
#include "plm/sylvester.hpp"

#include <string>
#include <vector>

namespace plm {

// Strict binary search tree whose nodes carry multiplicities.
class MultiplicityBst : private BinaryTree {
public:
    MultiplicityBst() = default;
    explicit MultiplicityBst(BinaryTree t);

    using BinaryTree::empty;
    using BinaryTree::label;
    using BinaryTree::left;
    using BinaryTree::node_count;
    using BinaryTree::postfix_reading;
    using BinaryTree::postorder;
    using BinaryTree::right;
    using BinaryTree::root;
    using BinaryTree::size;

    BinaryTree const& tree() const noexcept { return *this; }
    std::size_t multiplicity(NodeId id) const { return (*this)[id].multiplicity; }
    std::string key() const { return serialize(true); }
    std::string draw() const { return BinaryTree::draw(true); }

    friend bool operator==(MultiplicityBst const& a, MultiplicityBst const& b) { return a.tree() == b.tree(); }

    static bool valid(BinaryTree const& t);

private:
    friend MultiplicityBst taig_insert(MultiplicityBst t, Letter a);
};

MultiplicityBst taig_insert(MultiplicityBst t, Letter a);
// Inserts right to left.
MultiplicityBst p_taig(Word const& w);
RightStrictBst psi(MultiplicityBst const& t);

struct TaigPath {
    std::vector<MultiplicityBst> trees;
    std::vector<SylvStep> steps;  // lifted factorisations
};

TaigPath taig_path(MultiplicityBst const& t, MultiplicityBst const& u);

}  // namespace plm
