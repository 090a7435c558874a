#include "plm/bst.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plm {

NodeId BinaryTree::add_root(Letter a, std::size_t mult) {
    if (root_ != no_node) throw std::logic_error("tree already has a root");
    nodes_.push_back(Node{a, mult, no_node, no_node, no_node});
    root_ = static_cast<NodeId>(nodes_.size() - 1);
    return root_;
}

NodeId BinaryTree::add_child(NodeId parent, bool as_left, Letter a, std::size_t mult) {
    auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{a, mult, no_node, no_node, parent});
    auto& p = nodes_.at(static_cast<std::size_t>(parent));
    NodeId& slot = as_left ? p.left : p.right;
    if (slot != no_node) throw std::logic_error("child slot occupied");
    slot = id;
    return id;
}

std::size_t BinaryTree::depth(NodeId id) const {
    std::size_t d = 0;
    while ((id = parent(id)) != no_node) ++d;
    return d;
}

bool BinaryTree::is_ancestor(NodeId anc, NodeId id) const {
    for (; id != no_node; id = parent(id))
        if (id == anc) return true;
    return false;
}

std::vector<NodeId> BinaryTree::postorder() const { return postorder(root_); }

std::vector<NodeId> BinaryTree::postorder(NodeId from) const {
    std::vector<NodeId> out;
    if (from == no_node) return out;
    std::vector<std::pair<NodeId, bool>> stack{{from, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            out.push_back(id);
            continue;
        }
        stack.push_back({id, true});
        if (right(id) != no_node) stack.push_back({right(id), false});
        if (left(id) != no_node) stack.push_back({left(id), false});
    }
    return out;
}

std::vector<NodeId> BinaryTree::nodes_with_label(Letter a) const {
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].label == a) out.push_back(static_cast<NodeId>(i));
    std::sort(out.begin(), out.end(), [this](NodeId x, NodeId y) { return depth(x) < depth(y); });
    return out;
}

NodeId BinaryTree::leftmost(NodeId from) const {
    while (from != no_node && left(from) != no_node) from = left(from);
    return from;
}

NodeId BinaryTree::rightmost(NodeId from) const {
    while (from != no_node && right(from) != no_node) from = right(from);
    return from;
}

Word BinaryTree::postfix_reading() const {
    Word w;
    for (NodeId id : postorder())
        w.insert(w.end(), (*this)[id].multiplicity, label(id));
    return w;
}

Word BinaryTree::labels_sorted() const {
    auto w = postfix_reading();
    std::sort(w.begin(), w.end());
    return w;
}

Evaluation BinaryTree::evaluation(std::size_t rank) const { return plm::evaluation(postfix_reading(), rank); }

std::size_t BinaryTree::size() const {
    std::size_t n = 0;
    for (auto const& node : nodes_) n += node.multiplicity;
    return n;
}

BinaryTree BinaryTree::copy_subtree(NodeId from, std::vector<NodeId> const& drop) const {
    BinaryTree out;
    if (from == no_node) return out;
    auto dropped = [&](NodeId id) { return std::find(drop.begin(), drop.end(), id) != drop.end(); };
    std::function<void(NodeId, NodeId, bool)> go = [&](NodeId src, NodeId dst_parent, bool as_left) {
        if (src == no_node) return;
        if (dropped(src)) {
            if ((left(src) != no_node && !dropped(left(src))) || (right(src) != no_node && !dropped(right(src))))
                throw std::logic_error("copy_subtree: dropping a node would orphan a subtree");
            return;
        }
        auto const& n = (*this)[src];
        NodeId id = dst_parent == no_node ? out.add_root(n.label, n.multiplicity)
                                          : out.add_child(dst_parent, as_left, n.label, n.multiplicity);
        go(n.left, id, true);
        go(n.right, id, false);
    };
    go(from, no_node, true);
    return out;
}

std::string BinaryTree::serialize(bool show_mult) const {
    std::string s;
    std::function<void(NodeId)> go = [&](NodeId id) {
        if (id == no_node) {
            s += "·";
            return;
        }
        s += std::to_string(label(id));
        if (show_mult) s += "^" + std::to_string((*this)[id].multiplicity);
        if (left(id) == no_node && right(id) == no_node) return;
        s += '(';
        go(left(id));
        s += ")(";
        go(right(id));
        s += ')';
    };
    go(root_);
    return s;
}

std::string BinaryTree::draw(bool show_mult) const {
    std::ostringstream os;
    std::function<void(NodeId, std::size_t)> go = [&](NodeId id, std::size_t indent) {
        if (id == no_node) return;
        go(right(id), indent + 4);
        os << std::string(indent, ' ') << label(id);
        if (show_mult) os << '^' << (*this)[id].multiplicity;
        os << '\n';
        go(left(id), indent + 4);
    };
    go(root_, 0);
    return os.str();
}

std::string BinaryTree::canopy() const {
    if (empty()) throw std::invalid_argument("canopy of an empty tree");
    std::string bits;
    std::function<void(NodeId)> go = [&](NodeId id) {
        if (left(id) == no_node) bits += '1';
        else go(left(id));
        if (right(id) == no_node) bits += '0';
        else go(right(id));
    };
    go(root_);
    return bits.substr(1, bits.size() - 2);
}

bool operator==(BinaryTree const& a, BinaryTree const& b) {
    std::function<bool(NodeId, NodeId)> eq = [&](NodeId x, NodeId y) {
        if (x == no_node || y == no_node) return x == y;
        auto const& nx = a[x];
        auto const& ny = b[y];
        return nx.label == ny.label && nx.multiplicity == ny.multiplicity && eq(nx.left, ny.left) &&
               eq(nx.right, ny.right);
    };
    return eq(a.root(), b.root());
}

std::vector<NodeId> embed(BinaryTree const& pattern, BinaryTree const& t, NodeId at) {
    std::vector<NodeId> image(pattern.node_count(), no_node);
    if (pattern.empty()) return image;
    std::function<bool(NodeId, NodeId)> go = [&](NodeId p, NodeId x) {
        if (p == no_node) return true;
        if (x == no_node || pattern.label(p) != t.label(x)) return false;
        image[static_cast<std::size_t>(p)] = x;
        return go(pattern.left(p), t.left(x)) && go(pattern.right(p), t.right(x));
    };
    if (!go(pattern.root(), at)) return {};
    return image;
}

}  // namespace plm
