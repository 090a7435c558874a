#include "plm/taiga.hpp"

#include <functional>
#include <limits>
#include <map>

namespace plm {

bool MultiplicityBst::valid(BinaryTree const& t) {
    std::function<bool(NodeId, Letter, Letter)> ok = [&](NodeId id, Letter lo, Letter hi) {
        if (id == no_node) return true;
        Letter a = t.label(id);
        if (a <= lo || a >= hi || t[id].multiplicity == 0) return false;
        return ok(t.left(id), lo, a) && ok(t.right(id), a, hi);
    };
    return ok(t.root(), 0, std::numeric_limits<Letter>::max());
}

MultiplicityBst::MultiplicityBst(BinaryTree t) : BinaryTree(std::move(t)) {
    if (!valid(*this)) throw std::invalid_argument("not a binary search tree with multiplicities");
}

MultiplicityBst taig_insert(MultiplicityBst t, Letter a) {
    if (t.empty()) {
        t.add_root(a);
        return t;
    }
    for (NodeId x = t.root();;) {
        if (a == t.label(x)) {
            t.bump(x);
            return t;
        }
        bool go_left = a < t.label(x);
        NodeId next = go_left ? t.left(x) : t.right(x);
        if (next == no_node) {
            t.add_child(x, go_left, a);
            return t;
        }
        x = next;
    }
}

MultiplicityBst p_taig(Word const& w) {
    MultiplicityBst t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = taig_insert(std::move(t), *it);
    return t;
}

RightStrictBst psi(MultiplicityBst const& t) {
    // A reading of a search tree with distinct labels rebuilds its shape.
    Word w;
    for (NodeId id : t.postorder()) w.push_back(t.label(id));
    return p_sylv(w);
}

TaigPath taig_path(MultiplicityBst const& t, MultiplicityBst const& u) {
    if (t.tree().labels_sorted() != u.tree().labels_sorted())
        throw std::invalid_argument("taig_path: evaluations differ");
    std::map<Letter, std::size_t> mult;
    for (NodeId id : t.postorder()) mult[t.label(id)] = t.multiplicity(id);
    auto lift = [&](Word const& w) {
        Word out;
        for (Letter a : w) out.insert(out.end(), mult.at(a), a);
        return out;
    };

    TaigPath path;
    path.trees.push_back(t);
    auto sp = sylv_path(psi(t), psi(u));
    MultiplicityBst cur = t;
    for (auto const& st : sp.steps) {
        SylvStep lifted{st.rule, lift(st.left), lift(st.right)};
        if (p_taig(concat(lifted.left, lifted.right)) != cur)
            throw std::logic_error("taig_path: lifted factorisation does not represent " + cur.key());
        auto next = p_taig(concat(lifted.right, lifted.left));
        if (next != cur) path.trees.push_back(next);
        path.steps.push_back(std::move(lifted));
        cur = std::move(next);
    }
    if (cur != u) throw std::logic_error("taig_path: did not reach the target");
    return path;
}

}  // namespace plm
