#pragma once

#include "plm/bst.hpp"
#include "plm/sylvester.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plm {

// Equal labels go right: left subtree < node <= right subtree.
class LeftStrictBst : private BinaryTree {
public:
    LeftStrictBst() = default;
    explicit LeftStrictBst(BinaryTree t);

    using BinaryTree::canopy;
    using BinaryTree::draw;
    using BinaryTree::empty;
    using BinaryTree::label;
    using BinaryTree::left;
    using BinaryTree::node_count;
    using BinaryTree::parent;
    using BinaryTree::postorder;
    using BinaryTree::right;
    using BinaryTree::root;
    using BinaryTree::serialize;
    using BinaryTree::size;

    BinaryTree const& tree() const noexcept { return *this; }
    std::string key() const { return serialize(); }

    friend bool operator==(LeftStrictBst const& a, LeftStrictBst const& b) { return a.tree() == b.tree(); }

    static bool valid(BinaryTree const& t);

private:
    friend LeftStrictBst left_strict_insert(LeftStrictBst t, Letter a);
};

LeftStrictBst left_strict_insert(LeftStrictBst t, Letter a);

struct TwinPair {
    LeftStrictBst left;
    RightStrictBst right;

    std::string key() const { return left.key() + "|" + right.key(); }
    std::string draw() const;
    // Same symbols in both trees and complementary canopies.
    bool valid() const;
    friend bool operator==(TwinPair const&, TwinPair const&) = default;
};

// Left tree inserts left to right, right tree right to left.
TwinPair p_baxt(Word const& w);

// All words extracted by repeatedly removing a symbol that is a root of what remains of
// the left tree and a leaf of what remains of the right tree. Sorted.
std::vector<Word> baxt_readings(TwinPair const& p);

// g = pq, h = qp; checks pg = gq and hp = qh.
std::pair<Word, Word> baxt_oconj_witness(Word const& p, Word const& q);

}  // namespace plm
